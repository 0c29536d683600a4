"""
Singleton Helper

Decorator giving a class a lazily created shared instance reachable
through `instance()`, the way the logger exposes its own.
"""


def singleton(cls):
    """
    Add a _instance class attribute and an instance() classmethod.

    Usage:
    @singleton
    class Settings:
        pass

    settings = Settings.instance()

    Tests reset the shared instance by assigning None to `_instance`.
    """
    cls._instance = None

    def instance(cls, *args, **kwargs):
        if cls._instance is None:
            cls._instance = cls(*args, **kwargs)
        return cls._instance

    cls.instance = classmethod(instance)
    return cls
