"""Reader for a small INI-style configuration dialect."""


class ConfigError(Exception):
    pass


def parse_config(text):
    sections = {"": {}}
    current = ""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#") or line.startswith(";"):
            continue
        if line.startswith("[") and line.endswith("]"):
            current = line[1:-1].strip()
            if not current:
                raise ConfigError(f"line {lineno}: empty section name")
            sections.setdefault(current, {})
        elif "=" in line:
            key, _, value = line.partition("=")
            key = key.strip()
            if not key:
                raise ConfigError(f"line {lineno}: empty key")
            sections[current][key] = coerce(value.strip())
        else:
            raise ConfigError(f"line {lineno}: expected key=value")
    return sections


def coerce(value):
    lowered = value.lower()
    if lowered in ("true", "yes", "on"):
        return True
    if lowered in ("false", "no", "off"):
        return False
    try:
        return int(value)
    except ValueError:
        pass
    try:
        return float(value)
    except ValueError:
        pass
    return value


def get_path(config, dotted, default=None):
    section, _, key = dotted.partition(".")
    if not key:
        section, key = "", section
    return config.get(section, {}).get(key, default)


def merge_configs(base, override):
    merged = {name: dict(values) for name, values in base.items()}
    for name, values in override.items():
        merged.setdefault(name, {}).update(values)
    return merged
