"""Property-tree base class of the library settings and the dict helpers it needs."""

import tomllib
from collections.abc import Mapping
from copy import deepcopy
from pathlib import Path

from phoenixlib._src.defaults.defaults_values import DEFAULTS
from phoenixlib._src.exceptions import PhoenixBadUserInput, PhoenixMissingFile

SUPPORTED_PLOTTING_BACKENDS = ("matplotlib", "plotly")


def get_defaults_dict(arg=None) -> dict:
    """Copy of the hard coded settings, or of one section or value of them.

    Examples
    --------
    >>> from phoenixlib._src.defaults.defaults_utility import get_defaults_dict
    >>> get_defaults_dict("serve")
    {'host': '127.0.0.1', 'port': 8000}
    >>> get_defaults_dict("coder.maxdepth")
    3
    """
    node = DEFAULTS
    for key in [] if arg is None else arg.split("."):
        node = node[key]
    return deepcopy(node)


def update_nested_dict(d, u, same_keys_only=False) -> dict:
    """Merged copy of `d` with the values of `u`, descending into sub-dicts.

    Parameters
    ----------
    d: dict
        Base values. Left untouched.

    u: dict
        New values. A sub-dict of `u` replaces a non-dict value of `d`.

    same_keys_only: bool, default=False
        Drop the keys of `u` that `d` does not have.
    """
    if not isinstance(d, Mapping):
        return dict(u)
    merged = deepcopy(dict(d))
    for key, val in u.items():
        if same_keys_only and key not in merged:
            continue
        if isinstance(val, Mapping):
            val = update_nested_dict(merged.get(key, {}), val, same_keys_only)
        merged[key] = val
    return merged


def magic_to_dict(kwargs, separator="_") -> dict:
    """Nested dict from separator-joined keys.

    `{'ingest_timeout': 5}` becomes `{'ingest': {'timeout': 5}}`. Keys are
    applied in order, so a later key overwrites whatever an earlier one put
    at the same place.
    """
    assert isinstance(kwargs, dict), "kwargs must be a dictionary"
    assert isinstance(separator, str), "separator must be a string"
    out = {}
    for key, val in kwargs.items():
        *parents, leaf = key.split(separator)
        node = out
        for name in parents:
            if not isinstance(node.get(name), dict):
                node[name] = {}
            node = node[name]
        node[leaf] = magic_to_dict(val, separator) if isinstance(val, dict) else val
    return out


def _flat_items(node, prefix, separator):
    for key, val in node.items():
        path = f"{prefix}{separator}{key}" if prefix else key
        if isinstance(val, dict):
            yield from _flat_items(val, path, separator)
        else:
            yield path, val


def linearize_dict(kwargs, separator=".") -> dict:
    """One level dict with separator-joined keys.

    Examples
    --------
    >>> from phoenixlib._src.defaults.defaults_utility import linearize_dict
    >>> linearize_dict({'serve': {'host': 'localhost', 'port': 80}})
    {'serve.host': 'localhost', 'serve.port': 80}
    """
    assert isinstance(kwargs, dict), "kwargs must be a dictionary"
    assert isinstance(separator, str), "separator must be a string"
    return dict(_flat_items(kwargs, "", separator))


def validate_property_class(val, name, class_, parent):
    """Settings section from a section instance, a dict of its values or None."""
    if val is None:
        return class_()
    if isinstance(val, dict):
        return class_(**val)
    if isinstance(val, class_):
        return val
    msg = (
        f"the `{name}` property of `{type(parent).__name__}` must be an instance \n"
        f"of `{class_.__name__}` or a dict of its property values \n"
        f"but received {val!r} instead"
    )
    raise ValueError(msg)


class MagicProperties:
    """
    Settings node whose only attributes are the properties of its class.

    Every property is set once at init (to None unless given) and the
    instance is frozen afterwards. Keyword and `update` arguments accept
    underscore-joined paths into nested nodes, e.g. `ingest_timeout=5`.

    Raises
    ------
    AttributeError
        when a name is not a property of the node
    """

    _frozen = False

    def __init__(self, **kwargs):
        values = dict.fromkeys(self.property_names())
        for name, val in magic_to_dict(kwargs).items():
            if name not in values:
                raise AttributeError(self._unknown_property_msg(name))
            values[name] = val
        for name, val in values.items():
            setattr(self, name, val)
        object.__setattr__(self, "_frozen", True)

    @classmethod
    def property_names(cls) -> list[str]:
        """Names of the class properties, sorted."""
        return [name for name in dir(cls) if isinstance(getattr(cls, name, None), property)]

    def _unknown_property_msg(self, name) -> str:
        return (
            f"{type(self).__name__} has no property '{name}'"
            f"\n Available properties are: {self.property_names()}"
        )

    def __setattr__(self, key, value):
        # backing fields of existing properties stay writable once frozen
        if self._frozen and not hasattr(self, key):
            raise AttributeError(self._unknown_property_msg(key))
        object.__setattr__(self, key, value)

    def __repr__(self):
        args = ", ".join(f"{k}={getattr(self, k)!r}" for k in self.property_names())
        return f"{type(self).__name__}({args})"

    def as_dict(self, flatten=False, separator="."):
        """
        Property values as a dict, with nested nodes as sub-dicts.

        Parameters
        ----------
        flatten: bool, default=False
            Return one level with keys joined by `separator`.

        separator: str, default='.'
        """
        out = {}
        for name in self.property_names():
            val = getattr(self, name)
            out[name] = val.as_dict() if isinstance(val, MagicProperties) else val
        return linearize_dict(out, separator=separator) if flatten else out

    def update(self, arg=None, _match_properties=True, **kwargs):
        """
        Set several properties at once, nested ones included.

        Parameters
        ----------
        arg: dict, optional
            Nested or underscore-joined values. Merged with `kwargs`.

        _match_properties: bool, default=True
            Raise AttributeError for names that are not properties. When
            False such names are silently ignored.

        Returns
        -------
        self
        """
        new_values = magic_to_dict({**(arg or {}), **kwargs})
        merged = update_nested_dict(
            self.as_dict(), new_values, same_keys_only=not _match_properties
        )
        for name, val in merged.items():
            setattr(self, name, val)
        return self

    def copy(self):
        """Independent deep copy of this node."""
        return deepcopy(self)


def read_config_file(path, settings=None):
    """Apply a TOML config file to the settings tree.

    The file's tables mirror the settings sections, e.g.::

        [ingest]
        timeout = 10
        poolsize = 8

    Parameters
    ----------
    path: str or Path
        TOML file location.

    settings: MagicProperties, optional
        Settings object to update, by default `phoenixlib.defaults`.

    Returns
    -------
    settings: the updated settings object
    """
    if settings is None:
        from phoenixlib._src.defaults.defaults_classes import (  # noqa: PLC0415
            default_settings as settings,
        )
    path = Path(path)
    if not path.is_file():
        msg = f"Config file {str(path)!r} does not exist."
        raise PhoenixMissingFile(msg)
    with path.open("rb") as f:
        try:
            data = tomllib.load(f)
        except tomllib.TOMLDecodeError as err:
            msg = f"Config file {str(path)!r} is not valid TOML: {err}"
            raise PhoenixBadUserInput(msg) from err
    try:
        settings.update(data)
    except (AttributeError, AssertionError, ValueError) as err:
        msg = f"Config file {str(path)!r} holds invalid settings: {err}"
        raise PhoenixBadUserInput(msg) from err
    return settings
