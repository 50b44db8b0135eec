"""Graded pieces of toric Jacobian ideals and the quotient-ring pairings.

For a homogeneous f the Euler terms are g_rho = x_rho df/dx_rho.  Three
ideals matter: J0 = (g_rho), J = (df/dx_rho), and J1 = J0 : (prod x_rho).
Every graded piece is computed by exact row reduction over the rationals;
the J1 piece of a class is the preimage of the matching J0 piece under
multiplication by prod x_rho, which is a linear map between monomial
bases.
"""

from dataclasses import dataclass

from .cox import CoxPolynomial, monomial_basis
from .divisors import TorusDivisor, canonical_divisor, pic_class, ray_divisor
from .errors import InputError, InternalError
from .groebner import is_unit_ideal
from . import linalg


@dataclass(frozen=True)
class GradedSubspace:
    """A subspace of one graded piece of the Cox ring.

    ambient lists the exponent tuples of the monomial basis; rows and
    pivots are a reduced echelon basis in those coordinates.
    """

    ambient: tuple
    rows: tuple
    pivots: tuple

    @property
    def dim(self):
        return len(self.rows)

    @property
    def ambient_dim(self):
        return len(self.ambient)

    def index_of(self, exps):
        try:
            return self.ambient.index(tuple(exps))
        except ValueError:
            raise InputError(f"monomial {exps} is not in this graded piece") from None

    def vector_of(self, poly):
        """Coordinates of a polynomial that lives in this graded piece."""
        index = {e: k for k, e in enumerate(self.ambient)}
        vec = [0] * len(self.ambient)
        for e, c in poly.terms.items():
            if e not in index:
                raise InputError(f"monomial {e} is not in this graded piece")
            vec[index[e]] = c
        return vec

    def reduce(self, vec):
        return linalg.reduce_vector(self.rows, self.pivots, vec)

    def contains_vector(self, vec):
        return not any(self.reduce(vec))

    def contains(self, poly):
        return self.contains_vector(self.vector_of(poly))

    def coset_monomials(self):
        """Non-pivot monomials; their cosets are a basis of the quotient."""
        pivset = set(self.pivots)
        return tuple(e for k, e in enumerate(self.ambient) if k not in pivset)

    def reduce_unit(self, k):
        """Residual of the k-th ambient basis vector, computed cheaply."""
        for row, p in zip(self.rows, self.pivots):
            if p == k:
                v = [-x for x in row]
                v[k] += 1
                return v
            if p > k:
                break
        v = [0] * len(self.ambient)
        v[k] = 1
        return v

    def to_dict(self):
        return {
            "ambient": [list(e) for e in self.ambient],
            "rows": [[str(x) for x in row] for row in self.rows],
            "pivots": list(self.pivots),
        }


def _span(ambient, polys):
    index = {e: k for k, e in enumerate(ambient)}
    vectors = []
    for p in polys:
        vec = [0] * len(ambient)
        for e, c in p.terms.items():
            if e not in index:
                raise InternalError("product landed outside the expected graded piece")
            vec[index[e]] = c
        vectors.append(vec)
    rows, pivots = linalg.rref(vectors, len(ambient))
    return GradedSubspace(tuple(ambient), tuple(rows), tuple(pivots))


@dataclass(frozen=True)
class NondegeneracyVerdict:
    """Outcome of a nondegeneracy test.

    status is one of 'nondegenerate', 'degenerate' (exact chart decision),
    'certified' (positive saturation certificate with exponent k), or
    'undetermined' (no certificate up to k = k_max).
    """

    status: str
    k: int = None
    witness: str = None

    @property
    def label(self):
        if self.status == "certified":
            return f"certified({self.k})"
        if self.status == "undetermined":
            return f"undetermined(k_max={self.k})"
        return self.status

    def is_positive(self):
        return self.status in ("nondegenerate", "certified")


class JacobianSystem:
    """A homogeneous section f with its Euler terms and graded-piece caches."""

    def __init__(self, fan, f):
        if not isinstance(f, CoxPolynomial):
            raise InputError("f must be a CoxPolynomial")
        if f.is_zero():
            raise InputError("f must be a nonzero homogeneous polynomial")
        self.fan = fan
        self.f = f
        self.beta_class = f.homogeneous_class()
        self.beta_divisor = TorusDivisor(sorted(f.terms)[0])
        self.euler_terms = tuple(f.euler_term(i) for i in range(fan.n))
        self.partials = tuple(f.partial(i) for i in range(fan.n))
        self._basis_cache = {}
        self._piece_cache = {}
        self._check_euler_identities()

    def _check_euler_identities(self):
        # For every weight vector phi in the kernel of the ray matrix the
        # combination sum(phi_i * euler_term_i) must equal phi(beta) * f.
        rows = [[u[0] for u in self.fan.rays], [u[1] for u in self.fan.rays]]
        ker_rows, _ = linalg.kernel(rows, self.fan.n)
        for phi in ker_rows:
            const = sum(p * a for p, a in zip(phi, self.beta_divisor.coeffs))
            lhs = CoxPolynomial.zero(self.fan)
            for i, p in enumerate(phi):
                if p:
                    lhs = lhs + self.euler_terms[i].scale(p)
            if lhs != self.f.scale(const):
                raise InternalError("Euler identity failed on construction")

    def _basis(self, D):
        key = pic_class(self.fan, D).vec
        if key not in self._basis_cache:
            self._basis_cache[key] = monomial_basis(self.fan, D)
        return self._basis_cache[key]

    def section_dim(self, D):
        return len(self._basis(D))

    def j0_piece(self, D):
        """Graded piece of the Euler-term ideal at class(D)."""
        key = ("j0", pic_class(self.fan, D).vec)
        if key in self._piece_cache:
            return self._piece_cache[key]
        ambient = self._basis(D)
        products = []
        if ambient:
            mult = self._basis(D - self.beta_divisor)
            for m in mult:
                for g in self.euler_terms:
                    if g.terms:
                        products.append(g.shift(m))
        piece = _span(ambient, products)
        self._piece_cache[key] = piece
        return piece

    def j_piece(self, D):
        """Graded piece of the plain partial-derivative ideal at class(D)."""
        key = ("j", pic_class(self.fan, D).vec)
        if key in self._piece_cache:
            return self._piece_cache[key]
        ambient = self._basis(D)
        products = []
        if ambient:
            for rho in range(self.fan.n):
                g = self.partials[rho]
                if not g.terms:
                    continue
                mult = self._basis(D - self.beta_divisor + ray_divisor(self.fan, rho))
                for m in mult:
                    products.append(g.shift(m))
        piece = _span(ambient, products)
        self._piece_cache[key] = piece
        return piece

    def j1_piece(self, D):
        """Graded piece at class(D) of J0 : (prod x_rho).

        Multiplication by prod x_rho sends the monomial basis of class(D)
        injectively into the basis of class(D) - class(K); a section lies
        in J1 exactly when its image lies in the J0 piece there, so the
        piece is the kernel of the induced map to the J0 quotient.
        """
        key = ("j1", pic_class(self.fan, D).vec)
        if key in self._piece_cache:
            return self._piece_cache[key]
        ambient = self._basis(D)
        if not ambient:
            piece = GradedSubspace((), (), ())
            self._piece_cache[key] = piece
            return piece
        target = D - canonical_divisor(self.fan)
        w = self.j0_piece(target)
        tindex = {e: k for k, e in enumerate(w.ambient)}
        ncols = len(ambient)
        nrows = len(w.ambient)
        eqs = [[0] * ncols for _ in range(nrows)]
        for i, e in enumerate(ambient):
            te = tuple(a + 1 for a in e)
            if te not in tindex:
                raise InternalError("shifted monomial missing from the target piece")
            col = w.reduce_unit(tindex[te])
            for t in range(nrows):
                if col[t]:
                    eqs[t][i] = col[t]
        rows, pivots = linalg.kernel(eqs, ncols)
        piece = GradedSubspace(tuple(ambient), tuple(rows), tuple(pivots))
        self._piece_cache[key] = piece
        return piece

    def r1_dim(self, D):
        """Dimension of the graded piece of the quotient ring S/J1."""
        return self.section_dim(D) - self.j1_piece(D).dim

    def nondegenerate_decide(self):
        """Exact chart-by-chart decision.

        On the chart of a maximal cone the variables off the cone are set
        to 1; the Euler terms have no common zero there exactly when the
        substituted ideal is the unit ideal in two variables.
        """
        for c, (i, j) in enumerate(self.fan.maximal_cones):
            charts = []
            for g in self.euler_terms:
                chart = {}
                for e, coeff in g.terms.items():
                    m = (e[i], e[j])
                    s = chart.get(m, 0) + coeff
                    if s:
                        chart[m] = s
                    else:
                        chart.pop(m, None)
                if chart:
                    charts.append(chart)
            if not charts or not is_unit_ideal(charts):
                witness = (f"chart {c}: cone ({self.fan.labels[i]}, "
                           f"{self.fan.labels[j]})")
                return NondegeneracyVerdict("degenerate", witness=witness)
        return NondegeneracyVerdict("nondegenerate")

    def saturation_certificate(self, k_max=8):
        """Sufficient nondegeneracy certificate by irrelevant-ideal powers.

        If every degree-k product of the irrelevant generators lies in J0
        then the Euler terms cannot vanish simultaneously off the excluded
        locus, which certifies nondegeneracy.  The converse fails, so a
        miss up to k_max is only 'undetermined'.
        """
        if k_max < 1:
            raise InputError("k_max must be at least 1")
        from itertools import combinations_with_replacement
        gens = self.fan.irrelevant_generators()
        for k in range(1, k_max + 1):
            products = set()
            for combo in combinations_with_replacement(range(len(gens)), k):
                exps = [0] * self.fan.n
                for g in combo:
                    for t in range(self.fan.n):
                        exps[t] += gens[g][t]
                products.add(tuple(exps))
            ok = True
            for exps in sorted(products):
                piece = self.j0_piece(TorusDivisor(exps))
                vec = [0] * piece.ambient_dim
                vec[piece.index_of(exps)] = 1
                if not piece.contains_vector(vec):
                    ok = False
                    break
            if ok:
                return NondegeneracyVerdict("certified", k=k)
        return NondegeneracyVerdict("undetermined", k=k_max)

    def _coset_data(self, D):
        piece = self.j1_piece(D)
        return piece, piece.coset_monomials()

    def pairing_matrix(self, Da, Db):
        """Multiplication pairing R1_a x R1_b -> R1_top on coset monomials.

        Requires class(Da) + class(Db) = 3 beta + 2 K and a one-dimensional
        quotient at the top class; the sole non-pivot monomial there is the
        normalizing generator.
        """
        K = canonical_divisor(self.fan)
        want = 3 * pic_class(self.fan, self.beta_divisor) + 2 * pic_class(self.fan, K)
        have = pic_class(self.fan, Da) + pic_class(self.fan, Db)
        if have != want:
            raise InputError("classes do not add up to 3*beta + 2*K")
        top = Da + Db
        if self.r1_dim(top) != 1:
            raise InputError("the top graded piece of the quotient ring is not a line")
        tpiece, tcosets = self._coset_data(top)
        tgen = tcosets[0]
        tpos = tpiece.ambient.index(tgen)
        _, acosets = self._coset_data(Da)
        _, bcosets = self._coset_data(Db)
        tindex = {e: k for k, e in enumerate(tpiece.ambient)}
        matrix = []
        for ea in acosets:
            row = []
            for eb in bcosets:
                prod = tuple(a + b for a, b in zip(ea, eb))
                red = tpiece.reduce_unit(tindex[prod])
                row.append(red[tpos])
            matrix.append(row)
        return matrix

    def multiplication_matrix(self, eta, D_from, D_to):
        """Matrix of multiplication by eta between quotient coset bases."""
        if not eta.is_zero():
            ec = eta.homogeneous_class()
            want = pic_class(self.fan, D_to)
            if ec + pic_class(self.fan, D_from) != want:
                raise InputError("class(eta) + class(source) != class(target)")
        fpiece, fcosets = self._coset_data(D_from)
        tpiece, tcosets = self._coset_data(D_to)
        tsel = [tpiece.ambient.index(e) for e in tcosets]
        matrix = []
        for e in fcosets:
            prod = eta.shift(e)
            red = tpiece.reduce(tpiece.vector_of(prod))
            matrix.append([red[k] for k in tsel])
        return matrix

    def multiplication_rank(self, eta, D_from, D_to):
        matrix = self.multiplication_matrix(eta, D_from, D_to)
        if not matrix:
            return 0
        return linalg.rank(matrix, len(matrix[0]))
