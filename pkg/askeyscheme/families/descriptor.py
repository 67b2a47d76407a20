"""
    Uniform descriptors for the polynomial families: parameter schema, variable map, series definition,
    three-term recurrence, orthogonality measure and norm, difference/differential equations and generating functions.
"""

from __future__ import annotations

import cmath
from random import Random
from typing import Any, Callable, Dict, Mapping, NamedTuple, Optional, Sequence, Tuple
from typing_extensions import Final, Literal
from typing_validation import validate

from ..qcore import Number, to_complex
from ..hyper import SeriesSpec
from ..measures import MeasureSpec
from ..powerseries import PowerSeries
from .err import FamilyValueError

P = Mapping[str, Any]
"""
    Type alias for parameter records of a family.
"""

FamilyGroup = Literal["classical", "basic"]
"""
    Literal type for the two halves of the scheme: hypergeometric (``"classical"``) and basic hypergeometric (``"basic"``).
"""

FamilyGroups: Final = ("classical", "basic")

ParamKind = Literal["real", "complex", "integer", "base"]
"""
    Literal type for the kinds of family parameters. The ``"base"`` kind is the base ``q`` of basic families,
    the ``"integer"`` kind is a degree bound ``N``.
"""

ParamKinds: Final = ("real", "complex", "integer", "base")

class ParamInfo(NamedTuple):
    """
        A named parameter in a family's schema.
    """

    name: str
    """ Parameter name (e.g. ``"alpha"``). """

    kind: ParamKind
    """ Parameter kind. """

    description: str = ""
    """ Short description of the parameter's role. """


def params(*names: str, q: bool = False, N: bool = False, complex_names: Sequence[str] = ()) -> Tuple[ParamInfo, ...]:
    """
        Builds a parameter schema from plain names: real by default, complex if listed in ``complex_names``,
        plus the degree bound ``N`` and the base ``q`` if requested.

        >>> [p.name for p in params("a", "b", q=True)]
        ['a', 'b', 'q']
    """
    schema = [ParamInfo(name, "complex" if name in complex_names else "real") for name in names]
    if N:
        schema.append(ParamInfo("N", "integer", "degree bound"))
    if q:
        schema.append(ParamInfo("q", "base", "base of the basic hypergeometric series"))
    return tuple(schema)


VariableKind = Literal["DIRECT", "QUADRATIC", "LATTICE", "QLATTICE", "QLATTICE_DUAL", "TRIG", "QEXP"]
"""
    Literal type for the natural variable of a family, in which its polynomials are polynomials:

    - ``"DIRECT"``: the argument ``x`` itself
    - ``"QUADRATIC"``: :math:`x^2`
    - ``"LATTICE"``: :math:`\\lambda(x) = x(x+s)` for a family-dependent shift ``s``
    - ``"QLATTICE"``: :math:`\\mu(x) = q^{-x} + \\gamma\\delta q^{x+1}`
    - ``"QLATTICE_DUAL"``: :math:`\\lambda(x) = q^{-x} + cq^{x-N}`
    - ``"TRIG"``: :math:`x = \\cos\\theta`, with :math:`e^{i\\theta}` recovered from ``x``
    - ``"QEXP"``: :math:`q^{-x}`
"""

VariableKinds: Final = ("DIRECT", "QUADRATIC", "LATTICE", "QLATTICE", "QLATTICE_DUAL", "TRIG", "QEXP")

def _sqrt_pair(v: complex, c: complex) -> complex:
    # the root u of u^2 - v u + c = 0 with the larger modulus
    d = cmath.sqrt(v*v-4*c)
    u1, u2 = (v+d)/2, (v-d)/2
    return u1 if abs(u1) >= abs(u2) else u2

def _qlog(u: complex, q: float) -> complex:
    # solves q^{-x} = u for x
    return -cmath.log(u)/cmath.log(q)

class VariableMap(NamedTuple):
    """
        The map from the argument ``x`` of a family to its natural variable, and back.
    """

    kind: VariableKind
    """ The kind of natural variable. """

    forward: Callable[[P, complex], complex]
    """ The natural variable as a function of the argument. """

    inverse: Callable[[P, complex], complex]
    """ An argument mapping to a given value of the natural variable. """

    @staticmethod
    def direct() -> "VariableMap":
        """ The identity map. """
        return VariableMap("DIRECT", lambda p, x: x, lambda p, v: v)

    @staticmethod
    def quadratic() -> "VariableMap":
        """ The map :math:`x \\mapsto x^2`. """
        return VariableMap("QUADRATIC", lambda p, x: x*x, lambda p, v: cmath.sqrt(v))

    @staticmethod
    def lattice(shift: Callable[[P], complex]) -> "VariableMap":
        """ The map :math:`x \\mapsto x(x+s)`, with :math:`s` given as a function of the parameters. """
        def inverse(p: P, v: complex) -> complex:
            s = shift(p)
            return (-s+cmath.sqrt(s*s+4*v))/2
        return VariableMap("LATTICE", lambda p, x: x*(x+shift(p)), inverse)

    @staticmethod
    def qlattice(product: Callable[[P], complex]) -> "VariableMap":
        """ The map :math:`x \\mapsto q^{-x} + c\\,q^{x}`, with :math:`c` given as a function of the parameters. """
        def forward(p: P, x: complex) -> complex:
            u = qpower(p["q"], -x)
            return u+product(p)/u
        def inverse(p: P, v: complex) -> complex:
            return _qlog(_sqrt_pair(v, product(p)), p["q"])
        return VariableMap("QLATTICE", forward, inverse)

    @staticmethod
    def qlattice_dual(product: Callable[[P], complex]) -> "VariableMap":
        """ As :meth:`qlattice`, for the dual lattices :math:`q^{-x} + cq^{x-N}`. """
        vmap = VariableMap.qlattice(product)
        return VariableMap("QLATTICE_DUAL", vmap.forward, vmap.inverse)

    @staticmethod
    def trig() -> "VariableMap":
        """ The identity map on :math:`x = \\cos\\theta`; see :func:`trig_z` for :math:`e^{i\\theta}`. """
        return VariableMap("TRIG", lambda p, x: x, lambda p, v: v)

    @staticmethod
    def qexp() -> "VariableMap":
        """ The map :math:`x \\mapsto q^{-x}`. """
        return VariableMap("QEXP", lambda p, x: qpower(p["q"], -x), lambda p, v: _qlog(v, p["q"]))


def qpower(q: Number, x: Number) -> complex:
    """
        The power :math:`q^x` for real :math:`0 < q` and complex :math:`x`, exact for integer :math:`x`.

        >>> qpower(0.5, -2)
        (4+0j)
    """
    qf = float(q.real) if isinstance(q, complex) else float(q)
    xc = complex(x)
    if xc.imag == 0 and xc.real == int(xc.real):
        return complex(qf**int(xc.real))
    return cmath.exp(xc*cmath.log(qf))

def trig_z(x: Number) -> complex:
    """
        The point :math:`z = e^{i\\theta}` with :math:`x = \\cos\\theta = (z+z^{-1})/2`.
        For real :math:`x \\in [-1, 1]`, :math:`z = x + i\\sqrt{1-x^2}` lies on the upper unit half-circle;
        otherwise :math:`z = x + \\sqrt{x^2-1}` with the branch :math:`|z| \\geq 1`.

        >>> trig_z(1.0)
        (1+0j)
        >>> abs(trig_z(0.0)-1j) < 1e-16
        True
    """
    xc = to_complex(x, "argument")
    if xc.imag == 0 and -1 <= xc.real <= 1:
        return complex(xc.real, (1-xc.real*xc.real)**0.5)
    root = cmath.sqrt(xc*xc-1)
    z = xc+root
    if abs(z) < 1:
        z = xc-root
    return z


SeriesBuilder = Callable[[P, int, complex], Tuple[complex, SeriesSpec]]
"""
    Type alias for series definitions: returns (prefactor, series) with :math:`p_n(x) = \\text{prefactor}\\cdot\\text{series}`.
"""

FallbackBuilder = Callable[[P, int, complex], complex]
"""
    Type alias for rewritten (finite-sum) definitions, used when the series definition has a pole.
"""

class Recurrence(NamedTuple):
    """
        A three-term recurrence
        :math:`(s\\,v + c)\\,\\tilde p_n = A_n \\tilde p_{n+1} + B_n \\tilde p_n + C_n \\tilde p_{n-1}`
        in the natural variable :math:`v`, for the recurrence-normalized polynomials :math:`\\tilde p_n`,
        with :math:`\\tilde p_{-1} = 0` and :math:`\\tilde p_0 = 1`.
    """

    multiplier: Callable[[P], Tuple[complex, complex]]
    """ The pair :math:`(s, c)` of the left hand side multiplier :math:`s\\,v+c`. """

    coefficients: Callable[[P, int], Tuple[complex, complex, complex]]
    """ The triple :math:`(A_n, B_n, C_n)`. """

    first: Optional[Callable[[P], Tuple[complex, complex]]] = None
    """ Overrides :math:`\\tilde p_1 = s_1 v + c_1`, for families whose first polynomial does not follow the recurrence. """


EquationKind = Literal["ODE2", "DIFFERENCE", "IDIFFERENCE", "QDIFFERENCE_X", "QDIFFERENCE_Z", "QDERIVATIVE"]
"""
    Literal type for the kinds of equations satisfied by a family's polynomials.
"""

EquationKinds: Final = ("ODE2", "DIFFERENCE", "IDIFFERENCE", "QDIFFERENCE_X", "QDIFFERENCE_Z", "QDERIVATIVE")

class Evaluation:
    """
        Evaluation access to a fixed polynomial :math:`y = p_n`, handed to equation term builders.
    """

    __slots__ = ("_value", "_derivative")

    def __init__(self, value: Callable[[complex], complex], derivative: Callable[[complex, int], complex]):
        self._value = value
        self._derivative = derivative

    def __call__(self, x: Number) -> complex:
        """ The value :math:`y(x)`, at the family's argument ``x``. """
        return self._value(complex(x))

    def d(self, x: Number, order: int = 1) -> complex:
        """ The exact derivative :math:`y^{(k)}(x)` in the natural variable, from the monomial coefficients. """
        return self._derivative(complex(x), order)

    def z(self, z: Number) -> complex:
        """ The value :math:`y((z+z^{-1})/2)`, for equations in the z-form. """
        zc = complex(z)
        return self._value((zc+1/zc)/2)


TermBuilder = Callable[[P, int, complex, Evaluation, complex], Sequence[complex]]
"""
    Type alias for equation term builders: given (params, n, point, y, eigenvalue), return terms summing to zero.
"""

class EquationSpec(NamedTuple):
    """
        A differential, difference or q-difference equation, as a list of terms summing to zero at each sample point.
        The eigenvalue :math:`\\lambda_n` is passed to the term builder separately, so that it can be perturbed.
    """

    name: str
    """ Equation name (e.g. ``"jacobi_ode"``). """

    kind: EquationKind
    """ Equation kind. """

    terms: TermBuilder
    """ The term builder. """

    eigenvalue: Callable[[P, int], complex]
    """ The eigenvalue :math:`\\lambda_n`. """

    points: Callable[[P], Sequence[complex]]
    """
        Default nonsingular sample points: values of ``x``, or of :math:`z = e^{i\\theta}` for ``"QDIFFERENCE_Z"``
        and for the ``"QDERIVATIVE"`` equations of families in :math:`x = \\cos\\theta`.
    """


def three_point(eig: complex, lhs: complex, b: complex, d: complex,
                y_fwd: complex, y: complex, y_bwd: complex) -> Tuple[complex, ...]:
    """
        Terms of :math:`\\lambda\\,\\ell\\,y = B y_+ - (B+D) y + D y_-`, moved to one side.
    """
    return (-eig*lhs*y, b*y_fwd, -b*y, -d*y, d*y_bwd)


GFMode = Literal["EQUAL", "TRUNCATED", "FORMAL"]
"""
    Literal type for generating function comparison modes:

    - ``"EQUAL"``: an analytic identity, compared coefficient-wise up to the order
    - ``"TRUNCATED"``: equality only up to :math:`t^N`
    - ``"FORMAL"``: equality of (divergent) formal power series, never summed
"""

GFModes: Final = ("EQUAL", "TRUNCATED", "FORMAL")

class GFSpec(NamedTuple):
    """
        A generating function :math:`F(x, t) = \\sum_n c_n\\,p_n(x)\\,t^n`.
    """

    name: str
    """ Generating function name (e.g. ``"legendre_gf"``). """

    family: str
    """ Name of the family. """

    lhs: Callable[[P, complex, int], PowerSeries]
    """ Builds :math:`F(x, t)` as a power series in ``t`` of the given order. """

    coefficient: Callable[[P, int], complex]
    """ The multiplier :math:`c_n`. """

    mode: GFMode = "EQUAL"
    """ Comparison mode. """

    points: Optional[Callable[[P], Sequence[complex]]] = None
    """ Sample points, defaulting to the family's own. """

    defaults: Optional[Mapping[str, Any]] = None
    """ Parameter overrides for the default check (for displays valid on a parameter subset). """


class Orthogonality(NamedTuple):
    """
        An alternative orthogonality relation, for families whose moment problem is indeterminate and which
        are orthogonal with respect to more than one measure.
    """

    name: str
    """ Short name of the relation (e.g. ``"bilateral"``). """

    measure: Callable[[P], MeasureSpec]
    """ Builds the measure from the parameters. """

    norm: Callable[[P, int], complex]
    """ The norm :math:`h_n` with respect to this measure. """


Sampler = Callable[[Random], Dict[str, Any]]
"""
    Type alias for seeded samplers of positivity-domain parameters.
"""

class FamilyDescriptor:
    """
        Container class for a polynomial family of the scheme.

        All arguments after ``group`` are keyword-only.

        :param name: kebab-case family name (e.g. ``"continuous-dual-q-hahn"``)
        :type name: :obj:`str`
        :param title: display title
        :type title: :obj:`str`
        :param group: ``"classical"`` or ``"basic"``
        :type group: :obj:`FamilyGroup`
        :param schema: the parameter schema
        :param variable: the natural variable map
        :param series: the series definition
        :param recurrence: the three-term recurrence
        :param normalizer: :math:`\\kappa_n` with :math:`p_n = \\kappa_n \\tilde p_n`
        :param measure: builds the orthogonality measure from the parameters
        :param norm: the norm :math:`h_n`
        :param positivity: returns a message if the parameters lie outside the positivity domain, :obj:`None` otherwise
        :param sampler: draws positivity-domain parameters
        :param defaults: default parameters
        :param degree_bound: the degree bound :math:`N` of finite families
        :param fallback: rewritten finite-sum definition, used when the series has a pole
        :param equations: the equations satisfied by the polynomials
        :param generating_functions: the generating functions
        :param points: default sample points for the argument
        :param norm_formula: a short description of the norm's closed form
        :param orthogonalities: alternative orthogonality relations, selected by name in :meth:`measure` and :meth:`norm`
    """

    _name: str
    _title: str
    _group: FamilyGroup
    _schema: Tuple[ParamInfo, ...]
    _variable: VariableMap
    _series: SeriesBuilder
    _recurrence: Recurrence
    _normalizer: Callable[[P, int], complex]
    _measure: Optional[Callable[[P], MeasureSpec]]
    _norm: Optional[Callable[[P, int], complex]]
    _positivity: Callable[[P], Optional[str]]
    _sampler: Sampler
    _defaults: Dict[str, Any]
    _degree_bound: Optional[Callable[[P], int]]
    _fallback: Optional[FallbackBuilder]
    _equations: Tuple[EquationSpec, ...]
    _generating_functions: Tuple[GFSpec, ...]
    _points: Callable[[P], Sequence[complex]]
    _norm_formula: str
    _orthogonalities: Tuple[Orthogonality, ...]

    __slots__ = ("__weakref__", "_name", "_title", "_group", "_schema", "_variable", "_series", "_recurrence",
                 "_normalizer", "_measure", "_norm", "_positivity", "_sampler", "_defaults", "_degree_bound",
                 "_fallback", "_equations", "_generating_functions", "_points", "_norm_formula",
                 "_orthogonalities")

    def __new__(cls, name: str, title: str, group: FamilyGroup, *,
                schema: Sequence[ParamInfo],
                variable: VariableMap,
                series: SeriesBuilder,
                recurrence: Recurrence,
                normalizer: Callable[[P, int], complex],
                measure: Optional[Callable[[P], MeasureSpec]],
                norm: Optional[Callable[[P, int], complex]],
                positivity: Callable[[P], Optional[str]],
                sampler: Sampler,
                defaults: Mapping[str, Any],
                points: Callable[[P], Sequence[complex]],
                degree_bound: Optional[Callable[[P], int]] = None,
                fallback: Optional[FallbackBuilder] = None,
                equations: Sequence[EquationSpec] = (),
                generating_functions: Sequence[GFSpec] = (),
                norm_formula: str = "",
                orthogonalities: Sequence[Orthogonality] = ()) -> "FamilyDescriptor":
        # pylint: disable = too-many-arguments, too-many-locals
        validate(name, str)
        validate(title, str)
        if group not in FamilyGroups:
            raise FamilyValueError(f"Invalid family group {group!r}.")
        if name != name.lower() or " " in name:
            raise FamilyValueError(f"Family names must be kebab-case, found {name!r}.")
        schema = tuple(schema)
        names = [p.name for p in schema]
        if len(set(names)) != len(names):
            raise FamilyValueError(f"Duplicate parameter names in schema of {name!r}.")
        if (group == "basic") != ("q" in names):
            raise FamilyValueError(f"Family {name!r}: the base q is a parameter if and only if the family is basic.")
        if set(defaults) != set(names):
            raise FamilyValueError(f"Family {name!r}: defaults must assign exactly the schema parameters {names}.")
        if "N" in names and degree_bound is None:
            raise FamilyValueError(f"Family {name!r}: a degree bound is needed when N is a parameter.")
        instance = super().__new__(cls)
        instance._name = name
        instance._title = title
        instance._group = group
        instance._schema = schema
        instance._variable = variable
        instance._series = series
        instance._recurrence = recurrence
        instance._normalizer = normalizer
        instance._measure = measure
        instance._norm = norm
        instance._positivity = positivity
        instance._sampler = sampler
        instance._defaults = dict(defaults)
        instance._degree_bound = degree_bound
        instance._fallback = fallback
        instance._equations = tuple(equations)
        instance._generating_functions = tuple(generating_functions)
        instance._points = points
        instance._norm_formula = norm_formula
        instance._orthogonalities = tuple(orthogonalities)
        return instance

    @property
    def name(self) -> str:
        """ Kebab-case family name. """
        return self._name

    @property
    def title(self) -> str:
        """ Display title. """
        return self._title

    @property
    def group(self) -> FamilyGroup:
        """ The family's group, ``"classical"`` or ``"basic"``. """
        return self._group

    @property
    def schema(self) -> Tuple[ParamInfo, ...]:
        """ The parameter schema. """
        return self._schema

    @property
    def param_names(self) -> Tuple[str, ...]:
        """ The parameter names, in schema order. """
        return tuple(p.name for p in self._schema)

    @property
    def variable(self) -> VariableMap:
        """ The natural variable map. """
        return self._variable

    @property
    def recurrence(self) -> Recurrence:
        """ The three-term recurrence. """
        return self._recurrence

    @property
    def defaults(self) -> Dict[str, Any]:
        """ Default parameters (copy). """
        return dict(self._defaults)

    @property
    def equations(self) -> Tuple[EquationSpec, ...]:
        """ The equations satisfied by the polynomials. """
        return self._equations

    @property
    def generating_functions(self) -> Tuple[GFSpec, ...]:
        """ The generating functions. """
        return self._generating_functions

    @property
    def has_measure(self) -> bool:
        """ Whether the family has an orthogonality measure with closed-form norm. """
        return self._measure is not None and self._norm is not None

    @property
    def norm_formula(self) -> str:
        """ Short description of the closed form of the norm. """
        return self._norm_formula

    @property
    def has_fallback(self) -> bool:
        """ Whether a rewritten finite-sum definition is available. """
        return self._fallback is not None

    def prepare(self, values: Optional[Mapping[str, Any]] = None) -> Dict[str, Any]:
        """
            Completes a parameter record with the defaults, converting values to the schema kinds.

            :raises ValueError: if unknown parameter names are given, or values have the wrong kind
        """
        values = {} if values is None else dict(values)
        unknown = set(values)-set(self.param_names)
        if unknown:
            raise FamilyValueError(f"Unknown parameters {sorted(unknown)} for family {self._name!r}, "
                                   f"expected a subset of {list(self.param_names)}.")
        record: Dict[str, Any] = {}
        for info in self._schema:
            value = values.get(info.name, self._defaults[info.name])
            record[info.name] = _convert(self._name, info, value)
        return record

    def degree_bound(self, p: P) -> Optional[int]:
        """ The degree bound :math:`N`, or :obj:`None` for infinite families. """
        if self._degree_bound is None:
            return None
        return self._degree_bound(p)

    def positivity_violation(self, p: P) -> Optional[str]:
        """ A message if the parameters lie outside the positivity domain, :obj:`None` otherwise. """
        return self._positivity(p)

    def sample(self, rng: Random) -> Dict[str, Any]:
        """ Draws positivity-domain parameters. """
        return self.prepare(self._sampler(rng))

    def points(self, p: P) -> Tuple[complex, ...]:
        """ Default sample points of the argument. """
        return tuple(complex(x) for x in self._points(p))

    def series(self, p: P, n: int, x: complex) -> Tuple[complex, SeriesSpec]:
        """ The series definition at degree ``n`` and argument ``x``, as (prefactor, series). """
        return self._series(p, n, x)

    def fallback(self, p: P, n: int, x: complex) -> complex:
        """ The rewritten finite-sum definition. """
        if self._fallback is None:
            raise FamilyValueError(f"Family {self._name!r} has no rewritten definition.")
        return complex(self._fallback(p, n, x))

    def normalizer(self, p: P, n: int) -> complex:
        """ The factor :math:`\\kappa_n` with :math:`p_n = \\kappa_n\\tilde p_n`. """
        return complex(self._normalizer(p, n))

    @property
    def orthogonality_names(self) -> Tuple[str, ...]:
        """ The names of the alternative orthogonality relations, if any. """
        return tuple(o.name for o in self._orthogonalities)

    def _orthogonality(self, which: str) -> Orthogonality:
        for o in self._orthogonalities:
            if o.name == which:
                return o
        raise FamilyValueError(f"Family {self._name!r} has no orthogonality relation {which!r}, "
                               f"expected one of {list(self.orthogonality_names)}.")

    def measure(self, p: P, which: Optional[str] = None) -> MeasureSpec:
        """
            The orthogonality measure, or the measure of the named alternative relation.
        """
        if which is not None:
            return self._orthogonality(which).measure(p)
        if self._measure is None:
            raise FamilyValueError(f"Family {self._name!r} has no orthogonality measure.")
        return self._measure(p)

    def norm(self, p: P, n: int, which: Optional[str] = None) -> complex:
        """
            The closed-form norm :math:`h_n`, or the norm of the named alternative relation.
        """
        if which is not None:
            return complex(self._orthogonality(which).norm(p, n))
        if self._norm is None:
            raise FamilyValueError(f"Family {self._name!r} has no closed-form norm.")
        return complex(self._norm(p, n))

    def __repr__(self) -> str:
        return f"FamilyDescriptor({self._name!r}, group={self._group!r})"


def _convert(family: str, info: ParamInfo, value: Any) -> Any:
    if info.kind == "integer":
        if isinstance(value, float) and value.is_integer():
            value = int(value)
        if not isinstance(value, int) or isinstance(value, bool) or value < 0:
            raise FamilyValueError(f"Parameter {info.name!r} of family {family!r} must be a non-negative integer.")
        return value
    if info.kind == "base":
        q = complex(value)
        if q.imag != 0 or not 0 < q.real < 1:
            raise FamilyValueError(f"Base q of family {family!r} must satisfy 0 < q < 1, found {value!r}.")
        return q.real
    if info.kind == "real":
        c = to_complex(value, f"parameter {info.name!r}")
        if c.imag != 0:
            raise FamilyValueError(f"Parameter {info.name!r} of family {family!r} must be real, found {value!r}.")
        return c.real
    return to_complex(value, f"parameter {info.name!r}")
