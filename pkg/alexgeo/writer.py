#!python
# coding: utf-8

"""
Writer - JSON report and CSV summary writers.
"""

import csv
import json
import os
from .constants import CSV_HEADER
from .recordformat import RecordFormat


class JsonWriter(RecordFormat):
    """
    Writes reports (anything with a to_dict() method, dictionaries or lists of them) as indented JSON.
    Floats are written with the shortest repr that round-trips; inf and nan become null.

    Attributes
    ----------
    out_file : file object
        The JSON file passed as parameter.

    Methods
    -------
    write(obj)
        Writes a single report or a list of reports as one JSON document.

    Raises
    ------
    TypeError
        When calling __init__, if out_file is not a file object, is closed or is not writable.
        When calling write(), if obj cannot be converted to JSON.
    """

    def __init__(self, out_file):
        """
        Initializes file object (checks if out_file is a file object opened for writing).

        Parameters
        ----------
        out_file : file object
            An opened file handle ready for writing.
        """
        self._out_file = self._check_writable(out_file, "out_file")

    @property
    def out_file(self):
        """return out_file."""
        return self._out_file

    def _convert(self, obj):
        if hasattr(obj, "to_dict"):
            return self._jsonable(obj.to_dict())
        if isinstance(obj, (list, tuple)):
            return [self._convert(item) for item in obj]
        return self._jsonable(obj)

    def write(self, obj):
        """
        Writes obj as a JSON document followed by a newline.

        Parameters
        ----------
        obj : report, dict or list of them
        """
        json.dump(self._convert(obj), self._out_file, indent=2, allow_nan=False)
        self._out_file.write("\n")

    def __repr__(self):
        return "alexgeo.JsonWriter(%s)" % os.path.abspath(self._out_file.name)


class SummaryWriter(RecordFormat):
    """
    Writes the CSV summary of a Jensen campaign, one row per trial.
    Columns are given by constants.CSV_HEADER; floats use 17 significant digits and missing values are empty.

    Attributes
    ----------
    csv_file : file object
        The CSV file passed as parameter (open it with newline='').

    Methods
    -------
    writeheader()
        Writes the header row.
    writerow(report)
        Writes the row of a single JensenReport.
    writerows(reports)
        Writes the rows of several reports.

    Raises
    ------
    TypeError
        When calling __init__, if csv_file is not a file object, is closed or is not writable.
        When calling writerows(), if reports is not iterable.
    """

    def __init__(self, csv_file):
        """
        Initializes file object (checks if csv_file is a file object opened for writing).

        Parameters
        ----------
        csv_file : file object
            An opened file handle ready for writing.
        """
        self._csv_file = self._check_writable(csv_file, "csv_file")
        self._writer = csv.writer(self._csv_file, lineterminator="\r\n")

    @property
    def csv_file(self):
        """return csv_file."""
        return self._csv_file

    def writeheader(self):
        """Writes the header row."""
        self._writer.writerow(CSV_HEADER)

    def _row(self, report):
        space = report.space
        kappa = space.get("kappa")
        return [
            report.scenario,
            report.trial,
            report.seed,
            space.get("kind", ""),
            self._format_float(kappa),
            "" if space.get("dim") is None else space["dim"],
            report.field,
            self._format_float(report.alpha),
            self._format_float(report.f_at_barycenter),
            self._format_float(report.integral_f),
            self._format_float(report.variance_star),
            self._format_float(report.gap),
            report.verdict,
        ]

    def writerow(self, report):
        """
        Writes the summary row of a report.

        Parameters
        ----------
        report : JensenReport
        """
        self._writer.writerow(self._row(report))

    def writerows(self, reports):
        """
        Writes the summary rows of several reports.

        Parameters
        ----------
        reports : iterable of JensenReport
        """
        try:
            iter(reports)
        except TypeError as exc:
            raise TypeError("reports must be an iterable of JensenReport objects") from exc
        for report in reports:
            self.writerow(report)

    def __repr__(self):
        return "alexgeo.SummaryWriter(%s)" % os.path.abspath(self._csv_file.name)
