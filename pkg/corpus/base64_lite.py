"""Base64 encode/decode from first principles."""

ALPHABET = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/"
PAD = "="


def encode(data):
    if isinstance(data, str):
        data = data.encode("utf-8")
    out = []
    for i in range(0, len(data), 3):
        chunk = data[i:i + 3]
        buffer = 0
        for byte in chunk:
            buffer = buffer << 8 | byte
        buffer <<= 8 * (3 - len(chunk))
        for shift in [18, 12, 6, 0]:
            out.append(ALPHABET[buffer >> shift & 63])
        padding = 3 - len(chunk)
        if padding:
            out[-padding:] = [PAD] * padding
    return "".join(out)


def decode(text):
    clean = text.rstrip(PAD)
    out = bytearray()
    buffer = 0
    bits = 0
    for ch in clean:
        buffer = buffer << 6 | ALPHABET.index(ch)
        bits += 6
        if bits >= 8:
            bits -= 8
            out.append(buffer >> bits & 255)
    return bytes(out)


def roundtrip_ok(data):
    return decode(encode(data)) == (data if isinstance(data, bytes) else data.encode("utf-8"))
