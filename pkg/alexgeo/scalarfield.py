#!python
# coding: utf-8

"""
ScalarField - Real function on a model space with a claimed convexity modulus.
"""

import numpy as np
from .constants import (
    CONCAVE,
    CONSTANT,
    CONVEX,
    DISTANCE_TO,
    EUCLIDEAN,
    FIELD_CATALOG,
    LINEAR,
    MODES,
    NEG_SQUARED_DISTANCE_TO,
    SQUARED_DISTANCE_TO,
)
from .exceptions import ConfigurationError, SpaceMismatchError
from .point import Point


class ScalarField:
    """
    Represents a function f: M -> R together with a modulus claim: f is claimed geodesically alpha-convex
    (mode 'convex') or alpha-concave (mode 'concave'). Claims are checked with certify_alpha before use.

    Attributes
    ----------
    space : ModelSpace
        Domain of f.
    name : str
        Catalog name, or a user supplied label.
    alpha_claim : float
        Claimed modulus alpha.
    mode : 'convex' or 'concave'
        What alpha_claim refers to.
    params : dict
        Catalog parameters (JSON friendly).
    lipschitz_estimate : float or None
        Local Lipschitz constant, when known.
    has_closed_form_gradient : bool
        True if a closed-form gradient is available.

    Methods
    -------
    squared_distance_to(anchor, alpha=None), distance_to(anchor, alpha=0), neg_squared_distance_to(anchor, alpha=-2),
    linear(space, coefficients, offset=0, alpha=0), constant(space, value=0)
        Catalog constructors.
    from_spec(space, spec)
        Catalog constructor from a configuration dictionary {'name', 'alpha', 'params'}.
    gradient_at(p)
        Closed-form gradient at p (None when not available).
    negated()
        The field -f (an alpha-convex claim becomes a (-alpha)-concave one).
    with_lipschitz(estimate)
        Copy of the field carrying a Lipschitz estimate.
    describe()
        Dictionary description (used in reports).

    Raises
    ------
    TypeError
        When calling __init__, if evaluator or closed_form_gradient are not callable, or alpha_claim is not a number.
        When calling a catalog constructor, if the space does not fit the entry (Linear is Euclidean only).
    ConfigurationError
        When calling from_spec(), if the specification is malformed.
    """

    def __init__(
        self,
        space,
        evaluator,
        alpha_claim=0.0,
        mode=CONVEX,
        name="custom",
        params=None,
        lipschitz_estimate=None,
        closed_form_gradient=None,
    ):
        """
        Initializes the field.

        Parameters
        ----------
        space : ModelSpace
            Domain of f.
        evaluator : callable
            Point -> float.
        alpha_claim : float, optional
            Claimed modulus. Defaults to 0.
        mode : 'convex' or 'concave', optional
            What alpha_claim refers to. Defaults to 'convex'.
        name : str, optional
            Label. Defaults to 'custom'.
        params : dict, optional
            Parameters, for reports.
        lipschitz_estimate : float, optional
            Local Lipschitz constant.
        closed_form_gradient : callable, optional
            Point -> TangentVector.

        Raises
        ------
        TypeError
            If an argument is of the wrong type.
        """
        if not callable(evaluator):
            raise TypeError("evaluator must be callable")
        if closed_form_gradient is not None and not callable(closed_form_gradient):
            raise TypeError("closed_form_gradient must be callable or None")
        if isinstance(alpha_claim, bool) or not isinstance(alpha_claim, (int, float, np.number)):
            raise TypeError("alpha_claim must be a number")
        if not (isinstance(mode, str) and mode in MODES):
            raise TypeError("mode must be one of: %s" % ", ".join(MODES))
        if not isinstance(name, str):
            raise TypeError("name must be str")
        if lipschitz_estimate is not None and not lipschitz_estimate >= 0:
            raise TypeError("lipschitz_estimate must be a non-negative number or None")
        self._space = space
        self._evaluator = evaluator
        self._alpha_claim = float(alpha_claim)
        self._mode = mode
        self._name = name
        self._params = dict(params or {})
        self._lipschitz_estimate = None if lipschitz_estimate is None else float(lipschitz_estimate)
        self._closed_form_gradient = closed_form_gradient

    ##########
    # Catalog
    ##########

    @classmethod
    def squared_distance_to(cls, anchor, alpha=None):
        """
        f(x) = d(x, anchor)**2, gradient -2 log_x(anchor).

        The default alpha claim is 2 for curvature <= 0 (strong convexity of CAT(0) spaces) and 0 on spheres.
        """
        space = cls._anchor_space(anchor)
        if alpha is None:
            alpha = 2.0 if space.kappa <= 0 else 0.0

        def evaluator(p):
            return space.distance(p, anchor) ** 2

        def gradient(p):
            return space.log(p, anchor) * -2.0

        return cls(
            space,
            evaluator,
            alpha,
            name=SQUARED_DISTANCE_TO,
            params={"anchor": anchor.tolist()},
            closed_form_gradient=gradient,
        )

    @classmethod
    def neg_squared_distance_to(cls, anchor, alpha=-2.0):
        """f(x) = -d(x, anchor)**2, gradient 2 log_x(anchor)."""
        space = cls._anchor_space(anchor)

        def evaluator(p):
            return -(space.distance(p, anchor) ** 2)

        def gradient(p):
            return space.log(p, anchor) * 2.0

        return cls(
            space,
            evaluator,
            alpha,
            name=NEG_SQUARED_DISTANCE_TO,
            params={"anchor": anchor.tolist()},
            closed_form_gradient=gradient,
        )

    @classmethod
    def distance_to(cls, anchor, alpha=0.0):
        """
        f(x) = d(x, anchor), gradient -log_x(anchor) / |log_x(anchor)| away from the anchor.
        1-Lipschitz.
        """
        space = cls._anchor_space(anchor)

        def evaluator(p):
            return space.distance(p, anchor)

        def gradient(p):
            v = space.log(p, anchor)
            if v.is_tip:
                return None
            return -v.unit()

        return cls(
            space,
            evaluator,
            alpha,
            name=DISTANCE_TO,
            params={"anchor": anchor.tolist()},
            lipschitz_estimate=1.0,
            closed_form_gradient=gradient,
        )

    @classmethod
    def linear(cls, space, coefficients, offset=0.0, alpha=0.0):
        """f(x) = <c, x> + offset on Euclidean spaces, gradient c."""
        if space.kind != EUCLIDEAN:
            raise TypeError("Linear fields are only defined on euclidean spaces")
        c = np.array(coefficients, dtype=float)
        if c.shape != (space.dim,):
            raise TypeError("coefficients must have %d components" % space.dim)
        offset = float(offset)

        def evaluator(p):
            return float(c @ p.coords) + offset

        def gradient(p):
            return space.tangent(p, c)

        return cls(
            space,
            evaluator,
            alpha,
            name=LINEAR,
            params={"coefficients": c.tolist(), "offset": offset},
            lipschitz_estimate=float(np.linalg.norm(c)),
            closed_form_gradient=gradient,
        )

    @classmethod
    def constant(cls, space, value=0.0):
        """f(x) = value, gradient 0_x."""
        value = float(value)
        return cls(
            space,
            lambda p: value,
            0.0,
            name=CONSTANT,
            params={"value": value},
            lipschitz_estimate=0.0,
            closed_form_gradient=space.zero,
        )

    @classmethod
    def from_spec(cls, space, spec):
        """
        Catalog field from a configuration dictionary.

        Parameters
        ----------
        space : ModelSpace
            Domain.
        spec : dict
            {'name': catalog name, 'alpha': float (optional), 'params': dict (optional)}.
            Distance fields take params {'anchor': coordinates} (defaults to the origin of the space),
            Linear takes {'coefficients', 'offset'} and Constant takes {'value'}.

        Returns
        -------
        ScalarField

        Raises
        ------
        ConfigurationError
            If the specification is malformed.
        """
        if not isinstance(spec, dict) or spec.get("name") not in FIELD_CATALOG:
            raise ConfigurationError("field must be an object whose name is one of: %s" % ", ".join(FIELD_CATALOG))
        name = spec["name"]
        params = spec.get("params", {})
        if not isinstance(params, dict):
            raise ConfigurationError("field params must be an object")
        kwargs = {}
        if spec.get("alpha") is not None:
            kwargs["alpha"] = spec["alpha"]

        try:
            if name == LINEAR:
                return cls.linear(space, params["coefficients"], params.get("offset", 0.0), **kwargs)
            if name == CONSTANT:
                return cls.constant(space, params.get("value", 0.0))
            anchor = space.point(params["anchor"]) if "anchor" in params else space.origin()
            constructor = {
                SQUARED_DISTANCE_TO: cls.squared_distance_to,
                NEG_SQUARED_DISTANCE_TO: cls.neg_squared_distance_to,
                DISTANCE_TO: cls.distance_to,
            }[name]
            return constructor(anchor, **kwargs)
        except KeyError as exc:
            raise ConfigurationError("field %s is missing parameter %s" % (name, exc)) from exc
        except (TypeError, ValueError) as exc:
            raise ConfigurationError("invalid %s field: %s" % (name, exc)) from exc

    @staticmethod
    def _anchor_space(anchor):
        if not isinstance(anchor, Point):
            raise TypeError("anchor must be a Point")
        if not anchor.space.supports_geodesics:
            raise TypeError("catalog fields need a model space")
        return anchor.space

    #############
    # Properties
    #############

    @property
    def space(self):
        """return space."""
        return self._space

    @property
    def name(self):
        """return name."""
        return self._name

    @property
    def alpha_claim(self):
        """return alpha_claim."""
        return self._alpha_claim

    @property
    def mode(self):
        """return mode."""
        return self._mode

    @property
    def params(self):
        """return params."""
        return dict(self._params)

    @property
    def lipschitz_estimate(self):
        """return lipschitz_estimate."""
        return self._lipschitz_estimate

    @property
    def has_closed_form_gradient(self):
        """return has_closed_form_gradient."""
        return self._closed_form_gradient is not None

    def __call__(self, p):
        if not isinstance(p, Point):
            raise TypeError("p must be a Point")
        if p.space != self._space:
            raise SpaceMismatchError("point belongs to a different space")
        return float(self._evaluator(p))

    def gradient_at(self, p):
        """
        Closed-form gradient at p.

        Returns
        -------
        TangentVector or None
            None when the field has no closed form there.
        """
        if self._closed_form_gradient is None:
            return None
        return self._closed_form_gradient(p)

    def negated(self):
        """
        The field -f.

        f alpha-convex iff -f (-alpha)-concave, so the claim keeps its value up to sign and switches mode.

        Returns
        -------
        ScalarField
        """
        evaluator = self._evaluator
        gradient = self._closed_form_gradient
        negated_gradient = None
        if gradient is not None:

            def negated_gradient(p):
                g = gradient(p)
                return None if g is None else -g

        return ScalarField(
            self._space,
            lambda p: -evaluator(p),
            -self._alpha_claim,
            CONCAVE if self._mode == CONVEX else CONVEX,
            name="-" + self._name,
            params=self._params,
            lipschitz_estimate=self._lipschitz_estimate,
            closed_form_gradient=negated_gradient,
        )

    def with_lipschitz(self, estimate):
        """
        Copy of the field carrying a Lipschitz estimate.

        Returns
        -------
        ScalarField
        """
        return ScalarField(
            self._space,
            self._evaluator,
            self._alpha_claim,
            self._mode,
            self._name,
            self._params,
            estimate,
            self._closed_form_gradient,
        )

    def describe(self):
        """
        Dictionary description.

        Returns
        -------
        dict
            {'name', 'alpha', 'mode', 'params'}.
        """
        return {"name": self._name, "alpha": self._alpha_claim, "mode": self._mode, "params": self.params}

    def __repr__(self):
        return "alexgeo.ScalarField(%s, alpha_claim=%r, mode=%s)" % (self._name, self._alpha_claim, self._mode)
