"""The results table: every construction row with its expected values, and a
runner that recomputes each row and compares.

Expected values marked "frozen" (the f4 rows without printed counts and the
two exotic rank-7 rows) were computed once with this package and pinned as
regression values; every other number is an external expectation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .chevalley import catalog_algebra
from .repalpha import block_counts, jordan_decompose, parse_element, realize, structured_decompose
from .roots import catalog_gcm, derive_tilde
from .semisimplify import semisimplify
from .superalgebra import check_odd_cubes, check_super_jacobi, check_super_skew, superdim
from .verify import (
    TargetSpec,
    cartan_torus_images,
    certify,
    certify_even_route,
    custom_plan_g36,
    generator_images,
    recognize_even_type,
    subquotient_certificate,
    target_by_name,
    tilde_target,
)


@dataclass(frozen=True)
class RowSpec:
    algebra: str
    p: int
    elements: tuple[str, ...]  # all elements in the row's class; first is certified
    route: str  # maint | star | even | superdim | custom-g36 | el55
    subset: tuple[int, ...] | None = None  # admissible subset behind the first element
    target: str | None = None
    counts: tuple[int, ...] = ()
    sdim: tuple[int, int] = (0, 0)
    star_sdim: tuple[int, int] | None = None  # expected generator-subquotient superdim
    even_type: str | None = None

    @property
    def key(self) -> str:
        return f"{self.algebra}@{self.elements[0]}|p={self.p}"


TABLE: tuple[RowSpec, ...] = (
    RowSpec("f4", 3, ("e1",), "star", subset=(1,), target="sl(3|1)",
            counts=(15, 8, 7), sdim=(15, 8), star_sdim=(9, 6)),
    RowSpec("f4", 3, ("e4",), "maint", subset=(4,), target="g(1,6)",
            counts=(21, 14, 1), sdim=(21, 14)),
    # frozen: counts, superdim, and subquotient superdim computed by this package
    RowSpec("f4", 3, ("e1+e4",), "star", subset=(1, 4), target=None,
            counts=(6, 8, 10), sdim=(6, 8), star_sdim=(4, 4)),
    RowSpec("e6", 3, ("e2", "e1", "e6"), "maint", subset=(2,), target="g(2,6)",
            counts=(35, 20, 1), sdim=(35, 20)),
    RowSpec("e6", 3, ("e1+e2", "e2+e6", "e1+e6"), "maint", subset=(1, 2), target="g(3,3)",
            counts=(22, 16, 8), sdim=(22, 16)),
    RowSpec("e6", 3, ("e1+e2+e6",), "maint", subset=(1, 2, 6), target="g(2,3)",
            counts=(11, 14, 13), sdim=(11, 14)),
    RowSpec("e7", 3, ("e1", "e2", "e7"), "maint", subset=(1,), target="g(4,6)",
            counts=(66, 32, 1), sdim=(66, 32)),
    RowSpec("e7", 3, ("e1+e7", "e1+e2", "e2+e7"), "maint", subset=(1, 7), target="el(5;3)",
            counts=(39, 32, 10), sdim=(39, 32)),
    RowSpec("e7", 3, ("e1+e2+e7",), "maint", subset=(1, 2, 7), target="g(4,3)",
            counts=(24, 26, 19), sdim=(24, 26)),
    # counts follow from the stated dimension 52 and dim = n1 + 2 n2 + 3 n3
    RowSpec("e7", 3, ("e2+e5+e7",), "even", target="f4(even)",
            counts=(52, 0, 27), sdim=(52, 0), even_type="F4"),
    # counts follow from the stated superdimension (21|14)
    RowSpec("e7", 3, ("e1+e2+e5+e7",), "superdim", target="g(1,6)",
            counts=(21, 14, 28), sdim=(21, 14)),
    RowSpec("e8", 3, ("e1", "e2", "e8"), "maint", subset=(1,), target="g(8,6)",
            counts=(133, 56, 1), sdim=(133, 56)),
    RowSpec("e8", 3, ("e1+e2", "e2+e8", "e1+e8"), "maint", subset=(1, 2), target="g(6,6)",
            counts=(78, 64, 14), sdim=(78, 64)),
    RowSpec("e8", 3, ("e1+e2+e8",), "maint", subset=(1, 2, 8), target="g(8,3)",
            counts=(55, 50, 31), sdim=(55, 50)),
    RowSpec("e8", 3, ("e1+e2+e6+e8",), "custom-g36", target="g(3,6)",
            counts=(36, 40, 44), sdim=(36, 40)),
    RowSpec("e8", 5, ("e2+e3+e4",), "el55", target="el(5;5)",
            counts=(55, 0, 0, 32, 13), sdim=(55, 32)),
)


@dataclass
class TableRow:
    spec: RowSpec
    counts: tuple[int, ...]
    extra_counts: dict[str, tuple[int, ...]]
    sdim: tuple[int, int]
    conclusion: str
    ok: bool
    mismatches: list[str] = field(default_factory=list)
    certificate: dict | None = None

    def to_json_dict(self) -> dict:
        return {
            "algebra": self.spec.algebra,
            "p": self.spec.p,
            "elements": list(self.spec.elements),
            "target": self.spec.target,
            "block_counts": list(self.counts),
            "superdim": list(self.sdim),
            "conclusion": self.conclusion,
            "ok": self.ok,
            "mismatches": self.mismatches,
            **({"certificate": self.certificate} if self.certificate else {}),
        }


@lru_cache(maxsize=None)
def row_pipeline(algebra: str, p: int, element: str, subset: tuple[int, ...] | None):
    """Realize, decompose (structured when a subset is given), semisimplify."""
    alg = catalog_algebra(algebra, p)
    _, vec = parse_element(element, alg)
    realization = realize(alg, vec)
    if subset is not None:
        decomp = structured_decompose(realization, subset)
    else:
        decomp = jordan_decompose(realization)
    ss = semisimplify(realization, decomp)
    return realization, decomp, ss


@lru_cache(maxsize=None)
def run_row(spec: RowSpec) -> TableRow:
    realization, decomp, ss = row_pipeline(spec.algebra, spec.p, spec.elements[0], spec.subset)
    counts = block_counts(decomp)
    sdim = superdim(ss.algebra)
    mismatches: list[str] = []
    certificate = None
    if counts != spec.counts:
        mismatches.append(f"block counts {counts} != {spec.counts}")
    if sdim != spec.sdim:
        mismatches.append(f"superdim {sdim} != {spec.sdim}")
    extra_counts = {}
    for element in spec.elements[1:]:
        alg = catalog_algebra(spec.algebra, spec.p)
        _, vec = parse_element(element, alg)
        other = block_counts(jordan_decompose(realize(alg, vec)))
        extra_counts[element] = other
        if other != spec.counts:
            mismatches.append(f"{element}: block counts {other} != {spec.counts}")

    if spec.route == "maint":
        gens = generator_images(ss, spec.subset)
        cert = certify(ss, gens, tilde_target(spec.target, ss, spec.subset))
        certificate = cert.to_json_dict()
        conclusion = cert.conclusion
        if cert.conclusion != "Verified":
            mismatches.append(f"certificate {cert.conclusion}")
    elif spec.route == "custom-g36":
        gens = custom_plan_g36(ss)
        cert = certify(ss, gens, target_by_name("g(3,6)"))
        certificate = cert.to_json_dict()
        conclusion = cert.conclusion
        if cert.conclusion != "Verified":
            mismatches.append(f"certificate {cert.conclusion}")
    elif spec.route == "el55":
        cert = certify_even_route(ss, target_by_name("el(5;5)"))
        certificate = cert.to_json_dict()
        conclusion = cert.conclusion
        if cert.conclusion != "Verified":
            mismatches.append(f"certificate {cert.conclusion}")
    elif spec.route == "even":
        torus = cartan_torus_images(ss)
        try:
            label, _, dim_e = recognize_even_type(ss.algebra, torus)
            conclusion = f"EvenType:{label}"
            if label != spec.even_type or dim_e != spec.sdim[0]:
                mismatches.append(f"even type {label}/{dim_e} != {spec.even_type}/{spec.sdim[0]}")
        except Exception as exc:  # recognition failures are row failures
            conclusion = f"EvenType:failed({exc})"
            mismatches.append(conclusion)
    elif spec.route == "star":
        gens = generator_images(ss, spec.subset)
        tilde = derive_tilde(catalog_gcm(spec.algebra), spec.subset)
        name = spec.target or f"tilde({spec.algebra};{','.join(map(str, spec.subset))})"
        target = TargetSpec(name=name, p=spec.p, superdim=spec.star_sdim, gcm=tilde)
        cert, _ = subquotient_certificate(ss, gens, target)
        certificate = cert.to_json_dict()
        conclusion = f"Star:{cert.conclusion}"
        if cert.conclusion != "Verified":
            mismatches.append(f"subquotient certificate {cert.conclusion}")
    elif spec.route == "superdim":
        axioms = (
            check_super_skew(ss.algebra).ok
            and check_super_jacobi(ss.algebra).ok
            and check_odd_cubes(ss.algebra).ok
        )
        conclusion = "SuperdimMatch" if (sdim == spec.sdim and axioms) else "SuperdimMismatch"
        if not axioms:
            mismatches.append("axiom checks failed")
    else:
        raise ValueError(f"unknown route {spec.route}")
    return TableRow(
        spec=spec,
        counts=counts,
        extra_counts=extra_counts,
        sdim=sdim,
        conclusion=conclusion,
        ok=not mismatches,
        mismatches=mismatches,
        certificate=certificate,
    )


def run_table(specs=TABLE) -> list[TableRow]:
    return [run_row(spec) for spec in specs]
