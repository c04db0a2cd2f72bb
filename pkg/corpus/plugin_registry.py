"""Decorator-driven plugin registration."""

REGISTRY = {}


def register(name, replaces=None):
    """Class decorator that records the plugin under a name."""

    def wrapper(cls):
        if name in REGISTRY and replaces != name:
            raise KeyError(f"plugin {name!r} already registered")
        REGISTRY[name] = cls
        cls.plugin_name = name
        return cls

    return wrapper


def create(name, *args, **kwargs):
    cls = REGISTRY.get(name)
    if cls is None:
        raise KeyError(f"no plugin named {name!r}")
    return cls(*args, **kwargs)


def available():
    return sorted(REGISTRY)


@register("upper")
class UpperPlugin:
    def apply(self, text):
        return text.upper()


@register("reverse")
class ReversePlugin:
    def apply(self, text):
        return text[::-1]


@register("repeat")
class RepeatPlugin:
    def __init__(self, times=2):
        self.times = times

    def apply(self, text):
        return text * self.times


def apply_chain(text, names):
    for name in names:
        plugin = create(name)
        text = plugin.apply(text)
    return text
