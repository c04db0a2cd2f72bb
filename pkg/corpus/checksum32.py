"""Simple rolling checksums for change detection."""

MOD_ADLER = 65521


def adler32(data):
    if isinstance(data, str):
        data = data.encode("utf-8")
    a = 1
    b = 0
    for byte in data:
        a = (a + byte) % MOD_ADLER
        b = (b + a) % MOD_ADLER
    return b << 16 | a


def fletcher16(data):
    if isinstance(data, str):
        data = data.encode("utf-8")
    lo = hi = 0
    for byte in data:
        lo = (lo + byte) % 255
        hi = (hi + lo) % 255
    return hi << 8 | lo


def xor_digest(data):
    value = 0
    for byte in data.encode("utf-8") if isinstance(data, str) else data:
        value ^= byte
    return value


def chunked_signature(data, chunk_size=64):
    signatures = []
    for start in range(0, len(data), chunk_size):
        signatures.append(adler32(data[start:start + chunk_size]))
    return signatures


def changed_chunks(old_sigs, new_sigs):
    changed = []
    for i in range(max(len(old_sigs), len(new_sigs))):
        old = old_sigs[i] if i < len(old_sigs) else None
        new = new_sigs[i] if i < len(new_sigs) else None
        if old != new:
            changed.append(i)
    return changed
