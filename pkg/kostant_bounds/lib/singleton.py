"""
Metaclass-based Singleton implementation.

`SingletonMeta` guarantees one instance per class even when sweeps construct
registries from several worker threads at once.
"""
__all__ = ['SingletonMeta']

import threading
from typing import Any, ClassVar


class SingletonMeta(type):
    """
    Metaclass for implementing the Singleton pattern.
    """

    _instances: ClassVar[dict[type, Any]] = {}
    _lock: ClassVar[threading.Lock] = threading.Lock()

    def __call__(cls, *args, **kwargs):
        """
        Return the cached instance or create one if this is the first call.

        Returns:
            The singleton instance of the class.
        """

        if cls not in cls._instances:
            with cls._lock:
                if cls not in cls._instances:
                    cls._instances[cls] = super().__call__(*args, **kwargs)
        return cls._instances[cls]
