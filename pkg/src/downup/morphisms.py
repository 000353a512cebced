"""Algebra maps given by images of generators.

A map is only usable once :func:`verify` has confirmed that every defining
relation of the source is sent to zero in the target.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Dict, Optional

from .errors import InvalidParameter, ModeMismatch, RootMismatch, UnverifiedMap
from .ncalg import AlgebraElement, Presentation, downup, normal_form, qplane, qweyl
from .scalars import unify


@dataclass(frozen=True)
class GeneratorMap:
    source: Presentation
    target: Presentation
    images: tuple  # ((letter, AlgebraElement over target), ...)
    label: str = ""
    verified: bool = False

    def image(self, letter: str) -> AlgebraElement:
        return dict(self.images)[letter]


@dataclass(frozen=True)
class HomCheck:
    ok: bool
    residues: tuple  # ((relation name, AlgebraElement), ...) -- nonzero ones are certificates

    @property
    def certificate(self) -> Optional[AlgebraElement]:
        for _, r in self.residues:
            if not r.is_zero():
                return r
        return None


def relations(pres: Presentation):
    """Defining relations ``lhs - rhs`` as raw linear combinations, keyed R1, R2, ..."""
    out = []
    one = pres.one_scalar
    for i, rule in enumerate(pres.rules, 1):
        raw = [(rule.lhs, one)] + [(w, -c) for w, c in rule.rhs]
        out.append((f"R{i}", raw))
    return out


def _image_of_raw(m: GeneratorMap, raw) -> AlgebraElement:
    imgs = dict(m.images)
    acc = AlgebraElement.scalar(m.target, 0)
    for word, c in raw:
        term = AlgebraElement.scalar(m.target, c)
        for ch in word:
            term = term * imgs[ch]
        acc = acc + term
    return acc


def check_hom(m: GeneratorMap) -> HomCheck:
    """Substitute the images into every source relation and reduce in the target."""
    if m.source.mode != m.target.mode:
        raise ModeMismatch("source and target use different scalar fields")
    residues = tuple((name, _image_of_raw(m, raw)) for name, raw in relations(m.source))
    return HomCheck(all(r.is_zero() for _, r in residues), residues)


def verify(m: GeneratorMap) -> GeneratorMap:
    result = check_hom(m)
    if not result.ok:
        raise UnverifiedMap(f"{m.label or 'map'} does not respect the relations: residue {result.certificate}")
    return replace(m, verified=True)


def apply_hom(m: GeneratorMap, x: AlgebraElement) -> AlgebraElement:
    if not m.verified:
        raise UnverifiedMap("apply_hom needs a verified map")
    if x.pres != m.source:
        raise InvalidParameter("element does not belong to the source algebra")
    return _image_of_raw(m, list(x.terms.items()))


def check_roots(alpha, beta, r, s) -> None:
    """Roots of X^2 - alpha X - beta must satisfy r + s = alpha and r s = -beta."""
    alpha, beta, r, s = unify(alpha, beta, r, s)
    if r + s != alpha or r * s != -beta:
        raise RootMismatch(f"{r}, {s} are not the roots of X^2 - ({alpha})X - ({beta})")


def make_map(source: Presentation, target: Presentation, label: str = "", **images) -> GeneratorMap:
    imgs = []
    for g in source.generators:
        img = images[g]
        if not isinstance(img, AlgebraElement):
            img = normal_form(target, img) if isinstance(img, dict) else AlgebraElement.scalar(target, img)
        imgs.append((g, img))
    return GeneratorMap(source, target, tuple(imgs), label)


def quantum_plane_map(alpha, beta, r, s) -> GeneratorMap:
    """A(alpha, beta, 0) -> B(r), d -> a, u -> b."""
    check_roots(alpha, beta, r, s)
    alpha, beta, r = unify(alpha, beta, r)
    src, tgt = downup(alpha, beta, 0), qplane(r)
    a, b = AlgebraElement.gen(tgt, "a"), AlgebraElement.gen(tgt, "b")
    return make_map(src, tgt, f"A({alpha}, {beta}, 0) -> B({r})", d=a, u=b)


def quantum_weyl_map(alpha, beta, r, s) -> GeneratorMap:
    """A(alpha, beta, 1) -> C(r), d -> t a, u -> b with t = 1/(1 - s); needs s != 1.

    Expanding [d, [d,u]_r - t]_s = [d, [d,u]_r]_s + (s - 1) t d shows the
    relations with gamma = 1 require (s - 1) t = -1.
    """
    check_roots(alpha, beta, r, s)
    alpha, beta, r, s = unify(alpha, beta, r, s)
    if s == 1:
        raise InvalidParameter("co-root s = 1: t = 1/(1-s) is undefined")
    t = 1 / (1 - s)
    src, tgt = downup(alpha, beta, 1), qweyl(r)
    a, b = AlgebraElement.gen(tgt, "a"), AlgebraElement.gen(tgt, "b")
    return make_map(src, tgt, f"A({alpha}, {beta}, 1) -> C({r})", d=a * t, u=b)


def lemma_map(case: str, alpha, beta, r, s) -> GeneratorMap:
    if case == "a":
        return quantum_plane_map(alpha, beta, r, s)
    if case == "b":
        return quantum_weyl_map(alpha, beta, r, s)
    raise InvalidParameter(f"unknown case {case!r}; expected 'a' or 'b'")


def lift_letters(m: GeneratorMap) -> Dict[str, AlgebraElement]:
    """Preimages of the target generators when each image is a scalar multiple of one.

    Used to pull operators from the target back to the source.
    """
    out = {}
    for g, img in m.images:
        if len(img.terms) != 1:
            raise InvalidParameter(f"image of {g} is not a scalar multiple of a generator")
        (word, c), = img.terms.items()
        if len(word) != 1:
            raise InvalidParameter(f"image of {g} is not a scalar multiple of a generator")
        out[word] = AlgebraElement.gen(m.source, g) / c
    return out


def pull_back(m: GeneratorMap, y: AlgebraElement) -> AlgebraElement:
    """A source element mapping onto ``y`` (the maps here send generators to multiples of generators)."""
    pre = lift_letters(m)
    acc = AlgebraElement.scalar(m.source, 0)
    for word, c in y.terms.items():
        term = AlgebraElement.scalar(m.source, c)
        for ch in word:
            term = term * pre[ch]
        acc = acc + term
    return acc
