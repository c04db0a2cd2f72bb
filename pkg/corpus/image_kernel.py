"""Convolution kernels over grayscale pixel grids."""

KERNELS = {
    "identity": [[0, 0, 0], [0, 1, 0], [0, 0, 0]],
    "blur": [[1, 1, 1], [1, 1, 1], [1, 1, 1]],
    "sharpen": [[0, -1, 0], [-1, 5, -1], [0, -1, 0]],
    "edge": [[-1, -1, -1], [-1, 8, -1], [-1, -1, -1]]
}


def clamp_pixel(value):
    return max(0, min(255, int(round(value))))


def pixel_at(image, row, col):
    """Edge pixels extend beyond the border."""
    r = max(0, min(len(image) - 1, row))
    c = max(0, min(len(image[0]) - 1, col))
    return image[r][c]


def convolve(image, kernel_name):
    kernel = KERNELS[kernel_name]
    weight = sum(sum(row) for row in kernel)
    divisor = weight if weight != 0 else 1
    rows = len(image)
    cols = len(image[0]) if rows else 0
    out = []
    for r in range(rows):
        line = []
        for c in range(cols):
            acc = 0
            for kr in range(3):
                for kc in range(3):
                    acc += kernel[kr][kc] * pixel_at(image, r + kr - 1, c + kc - 1)
            line.append(clamp_pixel(acc / divisor))
        out.append(line)
    return out


def brightness(image):
    total = sum(sum(row) for row in image)
    count = sum(len(row) for row in image)
    return total / count if count else 0.0


def threshold(image, cutoff=128):
    return [[255 if px >= cutoff else 0 for px in row] for row in image]


def downsample(image, factor=2):
    out = []
    for r in range(0, len(image), factor):
        line = []
        for c in range(0, len(image[0]), factor):
            block = []
            for rr in range(r, min(r + factor, len(image))):
                for cc in range(c, min(c + factor, len(image[0]))):
                    block.append(image[rr][cc])
            line.append(clamp_pixel(sum(block) / len(block)))
        out.append(line)
    return out
