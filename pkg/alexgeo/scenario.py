#!python
# coding: utf-8

"""
Scenario - One entry of a Jensen campaign configuration.
"""

import dataclasses
from typing import Optional
import numpy as np
from .constants import (
    AUDIT_PROBES,
    BARYCENTER_MAX_ITER,
    BARYCENTER_TOL,
    CERTIFY_BUDGET,
    CERTIFY_LEVELS,
    GRADIENT_MULTISTART,
    SPHERE,
)
from .exceptions import ConfigurationError
from .measure import DiscreteMeasure
from .modelspace import ModelSpace
from .recordformat import RecordFormat
from .scalarfield import ScalarField


DEFAULT_OPTIONS = {
    "tol": BARYCENTER_TOL,
    "max_iter": BARYCENTER_MAX_ITER,
    "certify_budget": CERTIFY_BUDGET,
    "certify_levels": CERTIFY_LEVELS,
    "audit_probes": AUDIT_PROBES,
    "search_budget": GRADIENT_MULTISTART,
    "numeric_gradient": False,
    "diagnostic": True,
}


@dataclasses.dataclass
class Scenario(RecordFormat):
    """
    Jensen scenario: a space, a measure (explicit or a seeded random recipe), a field with its alpha claim and
    solver/certifier options.

    Attributes
    ----------
    name : str
    space : ModelSpace
    field : ScalarField
    measure : DiscreteMeasure or None
        Explicit measure (None for random recipes).
    recipe : dict or None
        {'count': int, 'radius': float, 'center': coordinates or None} for random measures.
    options : dict
        Solver and certifier options (see DEFAULT_OPTIONS).
    seed : int
        Base seed; trial k uses seed + k.
    trials : int
        Number of trials.
    index : int
        Position of the scenario in its configuration file.
    config : dict
        The configuration entry the scenario was built from.
    """

    name: str
    space: ModelSpace
    field: ScalarField
    measure: Optional[DiscreteMeasure] = None
    recipe: Optional[dict] = None
    options: dict = dataclasses.field(default_factory=lambda: dict(DEFAULT_OPTIONS))
    seed: int = 0
    trials: int = 1
    index: int = 0
    config: dict = dataclasses.field(default_factory=dict, repr=False)

    @classmethod
    def from_dict(cls, entry, index=0, seed_override=None):
        """
        Builds a scenario from a configuration entry.

        Parameters
        ----------
        entry : dict
            {'name', 'space', 'measure', 'field', 'options', 'seed', 'trials'} (schema in docs/config_schema.md).
        index : int, optional
            Position of the entry in the configuration. Defaults to 0.
        seed_override : int, optional
            Replaces the base seed of the entry.

        Returns
        -------
        Scenario

        Raises
        ------
        ConfigurationError
            If the entry is malformed.
        """
        if not isinstance(entry, dict):
            raise ConfigurationError("scenario %d must be an object" % index)
        name = entry.get("name", "scenario-%d" % index)
        if not isinstance(name, str):
            raise ConfigurationError("scenario %d: name must be a string" % index)
        space = cls._space_from_dict(entry.get("space"))
        field_ = ScalarField.from_spec(space, entry.get("field"))

        options = dict(DEFAULT_OPTIONS)
        extra = entry.get("options", {})
        if not isinstance(extra, dict) or set(extra) - set(DEFAULT_OPTIONS):
            raise ConfigurationError(
                "scenario %s: options must be an object with keys among %s" % (name, ", ".join(DEFAULT_OPTIONS))
            )
        options.update(extra)

        seed = entry.get("seed", 0) if seed_override is None else seed_override
        trials = entry.get("trials", 1)
        for key, value in (("seed", seed), ("trials", trials)):
            if isinstance(value, bool) or not isinstance(value, int) or value < 0:
                raise ConfigurationError("scenario %s: %s must be a non-negative integer" % (name, key))
        if trials < 1:
            raise ConfigurationError("scenario %s: trials must be at least 1" % name)

        measure, recipe = cls._measure_from_dict(space, entry.get("measure"), name)
        return cls(name, space, field_, measure, recipe, options, seed, trials, index, entry)

    @classmethod
    def _measure_from_dict(cls, space, description, name):
        if not isinstance(description, dict):
            raise ConfigurationError("scenario %s: measure must be an object" % name)
        if "random" in description:
            recipe = description["random"]
            if not isinstance(recipe, dict):
                raise ConfigurationError("scenario %s: measure.random must be an object" % name)
            count = recipe.get("count")
            radius = recipe.get("radius", 1.0)
            if isinstance(count, bool) or not isinstance(count, int) or count < 1:
                raise ConfigurationError("scenario %s: measure.random.count must be a positive integer" % name)
            if isinstance(radius, bool) or not isinstance(radius, (int, float)) or radius < 0:
                raise ConfigurationError("scenario %s: measure.random.radius must be a non-negative number" % name)
            # pairwise distances stay below D_kappa / 2
            if space.kind == SPHERE and not radius < space.diameter / 4.0:
                raise ConfigurationError("scenario %s: random ball radius must be smaller than D_kappa / 4" % name)
            center = recipe.get("center")
            if center is not None:
                cls._points_from_lists(space, [center])
            return None, {"count": count, "radius": float(radius), "center": center}

        points = cls._points_from_lists(space, description.get("points"))
        try:
            if "weights" in description:
                return DiscreteMeasure.normalized(points, description["weights"]), None
            return DiscreteMeasure.uniform(points), None
        except (TypeError, ValueError) as exc:
            raise ConfigurationError("scenario %s: invalid measure: %s" % (name, exc)) from exc

    def trial_seed(self, trial):
        """return the seed of the given trial."""
        return self.seed + trial

    def measure_for(self, trial):
        """
        Measure of the given trial (the explicit measure, or a sample of the random recipe seeded with
        seed + trial).

        Returns
        -------
        DiscreteMeasure
        """
        if self.measure is not None:
            return self.measure
        rng = np.random.default_rng(self.trial_seed(trial))
        center = None if self.recipe["center"] is None else self.space.point(self.recipe["center"])
        return DiscreteMeasure.random(self.space, self.recipe["count"], rng, center, self.recipe["radius"])
