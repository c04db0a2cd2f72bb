"""RGB/HSL color space conversions and hex formatting."""


def clamp(value, lo=0.0, hi=1.0):
    return max(lo, min(hi, value))


def hex_to_rgb(text):
    body = text.lstrip("#")
    if len(body) == 3:
        body = "".join(ch * 2 for ch in body)
    if len(body) != 6:
        raise ValueError(f"bad hex color {text!r}")
    return tuple(int(body[i:i + 2], 16) / 255 for i in [0, 2, 4])


def rgb_to_hex(rgb):
    return "#" + "".join(f"{round(clamp(v) * 255):02x}" for v in rgb)


def rgb_to_hsl(rgb):
    r, g, b = (clamp(v) for v in rgb)
    high = max(r, g, b)
    low = min(r, g, b)
    light = (high + low) / 2
    if high == low:
        return 0.0, 0.0, light
    delta = high - low
    if light > 0.5:
        sat = delta / (2 - high - low)
    else:
        sat = delta / (high + low)
    if high == r:
        hue = (g - b) / delta % 6
    elif high == g:
        hue = (b - r) / delta + 2
    else:
        hue = (r - g) / delta + 4
    return hue * 60, sat, light


def lighten(rgb, amount=0.1):
    h, s, l = rgb_to_hsl(rgb)
    return hsl_to_rgb(h, s, clamp(l + amount))


def hsl_to_rgb(hue, sat, light):
    c = (1 - abs(2 * light - 1)) * sat
    x = c * (1 - abs(hue / 60 % 2 - 1))
    m = light - c / 2
    sector = int(hue // 60) % 6
    table = [(c, x, 0), (x, c, 0), (0, c, x), (0, x, c), (x, 0, c), (c, 0, x)]
    r, g, b = table[sector]
    return r + m, g + m, b + m


def contrast_text(rgb):
    r, g, b = rgb
    luminance = 0.2126 * r + 0.7152 * g + 0.0722 * b
    return "#000000" if luminance > 0.5 else "#ffffff"
