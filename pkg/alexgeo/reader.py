#!python
# coding: utf-8

"""
Reader - Distance matrix, measure and scenario configuration readers.
"""

import csv
import json
import os
from .exceptions import ConfigurationError
from .measure import DiscreteMeasure
from .modelspace import ModelSpace
from .recordformat import RecordFormat
from .scenario import Scenario


class DistanceMatrixReader(RecordFormat):
    """
    Reader of distance matrix files: n rows of n comma-separated decimal numbers, no header.

    Attributes
    ----------
    matrix_file : file object
        The CSV file passed as parameter.

    Methods
    -------
    read()
        Parses the file into a finite metric ModelSpace.

    Raises
    ------
    TypeError
        When calling __init__, if matrix_file is not a file object, is closed or is not readable.
    ConfigurationError
        When calling read(), if a row is empty, has the wrong number of columns or holds something other than
        numbers.
    MetricError
        When calling read(), if the matrix is not a metric.
    """

    def __init__(self, matrix_file):
        """
        Initializes file object (checks if matrix_file is an opened file object).

        Parameters
        ----------
        matrix_file : file object
            An opened file handle for reading (open it with newline='').
        """
        self._matrix_file = self._check_readable(matrix_file, "matrix_file")

    @property
    def matrix_file(self):
        """return matrix_file."""
        return self._matrix_file

    def read(self):
        """
        Parses the distance matrix.

        Returns
        -------
        ModelSpace
            Finite metric space whose points are the row indices.
        """
        rows = []
        for line_number, row in enumerate(csv.reader(self._matrix_file), start=1):
            # blank trailing lines
            if not row or all(not cell.strip() for cell in row):
                continue
            try:
                rows.append([float(cell) for cell in row])
            except ValueError as exc:
                raise ConfigurationError("line %d: %s" % (line_number, exc)) from exc
        if not rows:
            raise ConfigurationError("distance matrix file is empty")
        size = len(rows)
        for line_number, row in enumerate(rows, start=1):
            if len(row) != size:
                raise ConfigurationError(
                    "line %d: expected %d columns, got %d" % (line_number, size, len(row))
                )
        return ModelSpace.finite_metric(rows)

    def __repr__(self):
        return "alexgeo.DistanceMatrixReader(%s)" % os.path.abspath(self._matrix_file.name)


class MeasureReader(RecordFormat):
    """
    Reader of measure files: {"space": {"kind", "dim", "kappa"}, "points": [[...], ...], "weights": [...]}.
    Weights are optional (uniform measure) and are normalised when given.

    Attributes
    ----------
    measure_file : file object
        The JSON file passed as parameter.

    Methods
    -------
    read()
        Parses the file into a DiscreteMeasure.

    Raises
    ------
    TypeError
        When calling __init__, if measure_file is not a file object, is closed or is not readable.
    ConfigurationError
        When calling read(), if the file is not valid JSON or does not describe a measure.
    """

    def __init__(self, measure_file):
        """
        Initializes file object (checks if measure_file is an opened file object).

        Parameters
        ----------
        measure_file : file object
            An opened file handle for reading.
        """
        self._measure_file = self._check_readable(measure_file, "measure_file")

    @property
    def measure_file(self):
        """return measure_file."""
        return self._measure_file

    def read(self):
        """
        Parses the measure.

        Returns
        -------
        DiscreteMeasure
        """
        try:
            description = json.load(self._measure_file)
        except json.JSONDecodeError as exc:
            raise ConfigurationError("measure file is not valid JSON: %s" % exc) from exc
        if not isinstance(description, dict):
            raise ConfigurationError("measure file must hold a JSON object")
        space = self._space_from_dict(description.get("space"))
        points = self._points_from_lists(space, description.get("points"))
        try:
            if "weights" in description:
                return DiscreteMeasure.normalized(points, description["weights"])
            return DiscreteMeasure.uniform(points)
        except (TypeError, ValueError) as exc:
            raise ConfigurationError("invalid measure: %s" % exc) from exc

    def __repr__(self):
        return "alexgeo.MeasureReader(%s)" % os.path.abspath(self._measure_file.name)


class ScenarioReader(RecordFormat):
    """
    Reader of Jensen campaign configurations: a JSON object with a top-level 'scenarios' array
    (schema in docs/config_schema.md).

    Attributes
    ----------
    config_file : file object
        The JSON file passed as parameter.
    seed_override : int or None
        Base seed replacing the seed of every scenario.
    entries : list of dict
        Raw scenario entries (after read()).

    Methods
    -------
    read()
        Parses the file into a list of Scenario objects.

    Raises
    ------
    TypeError
        When calling __init__, if config_file is not a file object, is closed or is not readable, or if
        seed_override is not a non-negative int.
    ConfigurationError
        When calling read(), if the file is not valid JSON or a scenario is malformed.
    """

    def __init__(self, config_file, seed_override=None):
        """
        Initializes file object (checks if config_file is an opened file object).

        Parameters
        ----------
        config_file : file object
            An opened file handle for reading.
        seed_override : int, optional
            Base seed replacing the seed of every scenario.
        """
        self._config_file = self._check_readable(config_file, "config_file")
        if seed_override is not None and (
            isinstance(seed_override, bool) or not isinstance(seed_override, int) or seed_override < 0
        ):
            raise TypeError("seed_override must be a non-negative int or None")
        self._seed_override = seed_override
        self._entries = []

    @property
    def config_file(self):
        """return config_file."""
        return self._config_file

    @property
    def seed_override(self):
        """return seed_override."""
        return self._seed_override

    @property
    def entries(self):
        """return entries."""
        return self._entries

    def read(self):
        """
        Parses every scenario of the configuration.

        Returns
        -------
        list of Scenario
            In configuration order.
        """
        try:
            config = json.load(self._config_file)
        except json.JSONDecodeError as exc:
            raise ConfigurationError("configuration is not valid JSON: %s" % exc) from exc
        if not isinstance(config, dict) or not isinstance(config.get("scenarios"), list):
            raise ConfigurationError("configuration must be an object with a 'scenarios' array")
        self._entries = config["scenarios"]
        if not self._entries:
            raise ConfigurationError("configuration has no scenarios")
        return [
            Scenario.from_dict(entry, index, self._seed_override)
            for index, entry in enumerate(self._entries)
        ]

    def __repr__(self):
        return "alexgeo.ScenarioReader(%s)" % os.path.abspath(self._config_file.name)
