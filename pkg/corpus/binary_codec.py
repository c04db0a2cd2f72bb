"""Fixed-layout binary record packing without the struct module."""


def pack_uint(value, size):
    if value < 0 or value >= 1 << size * 8:
        raise ValueError(f"value {value} does not fit {size} bytes")
    return bytes(value >> 8 * i & 0xFF for i in range(size - 1, -1, -1))


def unpack_uint(data):
    value = 0
    for byte in data:
        value = value << 8 | byte
    return value


def pack_record(record):
    """Layout: u16 id, u8 kind, u8 flags, u32 payload length, payload."""
    payload = record["payload"].encode("utf-8")
    out = bytearray()
    out.extend(pack_uint(record["id"], 2))
    out.extend(pack_uint(record["kind"], 1))
    out.extend(pack_uint(record.get("flags", 0), 1))
    out.extend(pack_uint(len(payload), 4))
    out.extend(payload)
    return bytes(out)


def unpack_record(data):
    if len(data) < 8:
        raise ValueError("record header truncated")
    length = unpack_uint(data[4:8])
    if len(data) < 8 + length:
        raise ValueError("record payload truncated")
    return {
        "id": unpack_uint(data[0:2]),
        "kind": unpack_uint(data[2:3]),
        "flags": unpack_uint(data[3:4]),
        "payload": data[8:8 + length].decode("utf-8")
    }, data[8 + length:]


def unpack_stream(data):
    records = []
    remaining = data
    while remaining:
        record, remaining = unpack_record(remaining)
        records.append(record)
    return records


def roundtrip(records):
    blob = b"".join(pack_record(r) for r in records)
    return unpack_stream(blob)
