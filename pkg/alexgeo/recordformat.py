#!python
# coding: utf-8

"""
RecordFormat - Class intended to be extended by the reader and writer classes.
"""

import math
import numpy as np
from .constants import FINITE_METRIC, FLOAT_FORMAT, SPACE_KINDS
from .exceptions import ConfigurationError
from .modelspace import ModelSpace


class RecordFormat:
    """
    Implements the conversions shared by the readers and writers (file object checks, space descriptions and
    float formatting).

    Methods
    -------
    _check_readable(file_object, name)
        Checks that file_object is a file object opened for reading.
    _check_writable(file_object, name)
        Checks that file_object is a file object opened for writing.
    _space_from_dict(description)
        Builds a ModelSpace from {'kind', 'dim', 'kappa'}.
    _points_from_lists(space, coordinates)
        Builds Points from lists of coordinates.
    _format_float(value)
        Formats a float with 17 significant digits (empty string for None).
    _jsonable(value)
        Converts numpy scalars and arrays (recursively) to plain Python objects.

    Raises
    ------
    TypeError
        When calling _check_readable/_check_writable, if the file object is of the wrong type, closed or has the
        wrong mode.
    ConfigurationError
        When calling _space_from_dict or _points_from_lists, if the description is malformed.
    """

    @staticmethod
    def _check_readable(file_object, name):
        # assume it's a file object
        if hasattr(file_object, "read") and hasattr(file_object, "closed") and hasattr(file_object, "readable"):
            if not file_object.closed and file_object.readable():
                return file_object
            raise TypeError("%s must be opened for reading" % name)
        raise TypeError("%s must be a file object" % name)

    @staticmethod
    def _check_writable(file_object, name):
        if hasattr(file_object, "write") and hasattr(file_object, "closed") and hasattr(file_object, "writable"):
            if not file_object.closed and file_object.writable():
                return file_object
            raise TypeError("%s must be opened for writing" % name)
        raise TypeError("%s must be a file object" % name)

    @staticmethod
    def _space_from_dict(description):
        """
        Builds a model space from its description.

        Parameters
        ----------
        description : dict
            {'kind': 'euclidean' | 'sphere' | 'hyperbolic', 'dim': int, 'kappa': float (optional)}.

        Returns
        -------
        ModelSpace

        Raises
        ------
        ConfigurationError
            If the description is malformed.
        """
        if not isinstance(description, dict):
            raise ConfigurationError("space must be an object")
        kind = description.get("kind")
        if kind not in SPACE_KINDS or kind == FINITE_METRIC:
            raise ConfigurationError("space kind must be one of: euclidean, sphere, hyperbolic")
        try:
            return ModelSpace(kind, dim=description.get("dim"), kappa=description.get("kappa"))
        except (TypeError, ValueError) as exc:
            raise ConfigurationError("invalid space %r: %s" % (description, exc)) from exc

    @staticmethod
    def _points_from_lists(space, coordinates):
        """
        Builds validated points.

        Parameters
        ----------
        space : ModelSpace
        coordinates : list of list of float

        Returns
        -------
        list of Point

        Raises
        ------
        ConfigurationError
            If a coordinate list does not describe a point of space.
        """
        if not isinstance(coordinates, list) or not coordinates:
            raise ConfigurationError("points must be a non empty array of coordinate arrays")
        try:
            return [space.point(coords) for coords in coordinates]
        except (TypeError, ValueError) as exc:
            raise ConfigurationError("invalid point: %s" % exc) from exc

    @staticmethod
    def _format_float(value):
        if value is None:
            return ""
        return FLOAT_FORMAT % value

    @classmethod
    def _jsonable(cls, value):
        if isinstance(value, dict):
            return {key: cls._jsonable(item) for key, item in value.items()}
        if isinstance(value, (list, tuple)):
            return [cls._jsonable(item) for item in value]
        if isinstance(value, np.ndarray):
            return cls._jsonable(value.tolist())
        if isinstance(value, np.bool_):
            return bool(value)
        if isinstance(value, np.integer):
            return int(value)
        if isinstance(value, (float, np.floating)):
            value = float(value)
            # JSON has no inf/nan literals
            return value if math.isfinite(value) else None
        return value
