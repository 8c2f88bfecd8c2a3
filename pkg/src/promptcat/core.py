"""Finitely presented categories with witness-based law checking.

Objects and arrows are symbolic labels. Composite arrows are paths of
generators; the empty path anchored at an object is its identity, so identity
and associativity laws hold by construction at the path level. Substantive
checking happens at the evaluation level: an evaluation context assigns
concrete string semantics to arrows, and law reports compare evaluated
composites on finite witness suites.

Composition is diagrammatic throughout: ``compose(f, g)`` means "f, then g"
and requires ``f.cod == g.dom``.

Arrow equality in reports is witness-extensional: two composites are judged
equal iff they agree on every declared witness string. Reports record both
exact string equality and whitespace-normalized equality; pass/fail is
decided on the exact form.
"""

from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping, Protocol, Sequence

from .errors import (
    CompositionError,
    ConstructionError,
    CurryShapeError,
    EvaluationError,
    IllFormedFunctorError,
    IncompleteTransformationError,
    MissingSemanticsError,
    UnknownObjectError,
)
from .slots import find_slots, render

DEFAULT_MAX_INSTANCES = 10_000


@dataclass(frozen=True)
class Arrow:
    """A generating arrow between two named objects.

    ``template`` optionally carries a one-slot string description of the
    arrow's action; contexts that evaluate by rendering use it, table-driven
    contexts may ignore it and dispatch on the label.
    """

    label: str
    dom: str
    cod: str
    template: str | None = None


@dataclass(frozen=True)
class Path:
    """A composite of generators; the empty path is an identity arrow."""

    dom: str
    cod: str
    arrows: tuple[Arrow, ...] = ()

    def __post_init__(self):
        if not self.arrows:
            if self.dom != self.cod:
                raise CompositionError(
                    f"empty path must be an endo-path, got {self.dom} -> {self.cod}"
                )
            return
        if self.arrows[0].dom != self.dom or self.arrows[-1].cod != self.cod:
            raise CompositionError("path endpoints disagree with its arrows")
        for left, right in zip(self.arrows, self.arrows[1:]):
            if left.cod != right.dom:
                raise CompositionError(
                    f"{left.label}: ...->{left.cod} cannot precede "
                    f"{right.label}: {right.dom}->..."
                )

    @property
    def is_identity(self) -> bool:
        return not self.arrows

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(a.label for a in self.arrows)

    def then(self, other: "Path") -> "Path":
        return compose(self, other)

    def __str__(self) -> str:
        if self.is_identity:
            return f"1_{self.dom}"
        return " ; ".join(self.labels)


def compose(f: Path, g: Path) -> Path:
    """Diagrammatic composite: ``f`` first, then ``g``. Identities are absorbed."""
    if f.cod != g.dom:
        raise CompositionError(
            f"cannot compose ...->{f.cod} with {g.dom}->...: endpoints differ"
        )
    return Path(f.dom, g.cod, f.arrows + g.arrows)


def as_path(arrow: Arrow) -> Path:
    return Path(arrow.dom, arrow.cod, (arrow,))


@dataclass(frozen=True)
class CategoryPresentation:
    """Objects, generating arrows, and relations between composite paths.

    Identities exist implicitly for every object (empty paths); the
    ``implicit_identities`` flag records that policy.
    """

    objects: frozenset[str]
    generators: tuple[Arrow, ...]
    relations: tuple[tuple[Path, Path], ...] = ()
    implicit_identities: bool = True

    def __post_init__(self):
        labels = [a.label for a in self.generators]
        if len(labels) != len(set(labels)):
            raise ConstructionError("generator labels must be unique")
        for a in self.generators:
            if a.dom not in self.objects or a.cod not in self.objects:
                raise ConstructionError(
                    f"arrow {a.label!r} references undeclared objects"
                )
        for lhs, rhs in self.relations:
            if lhs.dom != rhs.dom or lhs.cod != rhs.cod:
                raise ConstructionError(
                    f"relation {lhs} = {rhs} does not share endpoints"
                )

    @property
    def generator_map(self) -> dict[str, Arrow]:
        return {a.label: a for a in self.generators}

    def identity(self, obj: str) -> Path:
        if obj not in self.objects:
            raise UnknownObjectError(f"unknown object {obj!r}")
        return Path(obj, obj, ())

    def path(self, labels: Sequence[str]) -> Path:
        """Build a composite path from generator labels, left to right."""
        gens = self.generator_map
        arrows = []
        for label in labels:
            if label not in gens:
                raise UnknownObjectError(f"unknown generator {label!r}")
            arrows.append(gens[label])
        if not arrows:
            raise ConstructionError("a path of labels needs at least one arrow")
        return Path(arrows[0].dom, arrows[-1].cod, tuple(arrows))

    def op(self) -> "CategoryPresentation":
        """Opposite presentation: same data with all arrows reversed."""
        gens = tuple(Arrow(a.label, a.cod, a.dom, a.template) for a in self.generators)
        gen_map = {a.label: a for a in gens}

        def rev(p: Path) -> Path:
            arrows = tuple(gen_map[a.label] for a in reversed(p.arrows))
            return Path(p.cod, p.dom, arrows)

        rels = tuple((rev(l), rev(r)) for l, r in self.relations)
        return CategoryPresentation(self.objects, gens, rels, self.implicit_identities)

    @staticmethod
    def build(
        objects: Iterable[str],
        arrows: Iterable[Arrow],
        relations: Iterable[tuple[Sequence[str], Sequence[str]]] = (),
    ) -> "CategoryPresentation":
        """Construct from label-level data; relations are pairs of label lists."""
        cat = CategoryPresentation(frozenset(objects), tuple(arrows))
        rels = tuple((cat.path(l), cat.path(r)) for l, r in relations)
        return CategoryPresentation(cat.objects, cat.generators, rels)


class EvalContext(Protocol):
    """Concrete semantics for a presentation, used by the law checkers.

    ``witnesses`` returns the finite witness strings declared for an object;
    ``apply`` runs one generator on one string; ``apply_description`` runs a
    one-slot description string; ``complete`` runs a fully rendered prompt.
    """

    def witnesses(self, obj: str) -> Sequence[str]: ...

    def apply(self, arrow: Arrow, value: str) -> str: ...

    def apply_description(self, description: str, value: str) -> str: ...

    def complete(self, prompt: str) -> str: ...


class TableContext:
    """Evaluation semantics backed by plain lookup tables or callables.

    ``semantics`` maps arrow labels to either a ``str -> str`` callable or a
    finite dict. ``descriptions`` does the same for description strings, and
    ``prompts`` for fully rendered prompts.
    """

    def __init__(
        self,
        witnesses: Mapping[str, Sequence[str]],
        semantics: Mapping[str, Callable[[str], str] | Mapping[str, str]],
        descriptions: Mapping[str, Callable[[str], str] | Mapping[str, str]] | None = None,
        prompts: Mapping[str, str] | Callable[[str], str] | None = None,
    ):
        self._witnesses = {k: tuple(v) for k, v in witnesses.items()}
        self._semantics = dict(semantics)
        self._descriptions = dict(descriptions or {})
        self._prompts = prompts

    def witnesses(self, obj: str) -> Sequence[str]:
        return self._witnesses.get(obj, ())

    @staticmethod
    def _run(entry, value: str, what: str) -> str:
        if callable(entry):
            return entry(value)
        try:
            return entry[value]
        except KeyError:
            raise EvaluationError(f"{what} has no entry for input {value!r}")

    def apply(self, arrow: Arrow, value: str) -> str:
        if arrow.label not in self._semantics:
            raise MissingSemanticsError(arrow.label)
        return self._run(self._semantics[arrow.label], value, f"arrow {arrow.label!r}")

    def apply_description(self, description: str, value: str) -> str:
        if description in self._descriptions:
            return self._run(
                self._descriptions[description], value, f"description {description!r}"
            )
        slots = find_slots(description)
        if len(slots) != 1:
            raise EvaluationError(
                f"description must have exactly one slot, got {len(slots)}"
            )
        return self.complete(render(description, {slots[0]: value}))

    def complete(self, prompt: str) -> str:
        if self._prompts is None:
            raise EvaluationError("this table context cannot run raw prompts")
        return self._run(self._prompts, prompt, "prompt table")


def evaluate_path(path: Path, value: str, ctx: EvalContext) -> str:
    """Fold a path's generators over an input string, left to right."""
    for arrow in path.arrows:
        value = ctx.apply(arrow, value)
    return value


def evaluate(description: str, value: str, ctx: EvalContext) -> str:
    """Apply a one-slot description to an input via the context.

    This is the evaluation map of the closed structure: an element of an
    exponential object together with an input yields an output.
    """
    slots = find_slots(description)
    if len(slots) != 1:
        raise EvaluationError(
            f"expected a single-slot description, found slots {slots!r}"
        )
    return ctx.apply_description(description, value)


_WS_RE = re.compile(r"\s+")


def normalize_text(s: str) -> str:
    """Whitespace-collapsed, case-folded form used as the loose equality."""
    return _WS_RE.sub(" ", s).strip().casefold()


@dataclass(frozen=True)
class LawInstance:
    """One checked equation instance with both sides' evaluated values."""

    law: str
    subject: str
    witness: str
    left: str
    right: str

    @property
    def passed(self) -> bool:
        return self.left == self.right

    @property
    def normalized_equal(self) -> bool:
        return normalize_text(self.left) == normalize_text(self.right)

    def as_dict(self) -> dict:
        return {
            "law": self.law,
            "subject": self.subject,
            "witness": self.witness,
            "left": self.left,
            "right": self.right,
            "passed": self.passed,
            "normalized_equal": self.normalized_equal,
        }


@dataclass
class LawReport:
    """Outcome of a law-check run: every instance, pass/fail, counterexamples."""

    title: str
    instances: list[LawInstance] = field(default_factory=list)
    truncated: bool = False

    @property
    def passed(self) -> bool:
        return all(inst.passed for inst in self.instances)

    @property
    def failures(self) -> list[LawInstance]:
        return [inst for inst in self.instances if not inst.passed]

    def counterexample(self) -> LawInstance | None:
        failures = self.failures
        return failures[0] if failures else None

    def extend(self, other: "LawReport") -> None:
        self.instances.extend(other.instances)
        self.truncated = self.truncated or other.truncated

    def summary(self) -> str:
        n_fail = len(self.failures)
        status = "PASS" if self.passed else f"FAIL ({n_fail} failing)"
        return f"{self.title}: {len(self.instances)} instances, {status}"

    def as_dict(self) -> dict:
        return {
            "schema_version": 1,
            "title": self.title,
            "passed": self.passed,
            "n_instances": len(self.instances),
            "n_failures": len(self.failures),
            "truncated": self.truncated,
            "instances": [inst.as_dict() for inst in self.instances],
        }

    def to_json(self, indent: int = 2) -> str:
        return json.dumps(self.as_dict(), indent=indent, sort_keys=True) + "\n"


class _InstanceBudget:
    """Caps the number of emitted law instances, deterministically."""

    def __init__(self, limit: int):
        self.limit = limit
        self.used = 0
        self.exhausted = False

    def take(self) -> bool:
        if self.used >= self.limit:
            self.exhausted = True
            return False
        self.used += 1
        return True


def _sorted_generators(cat: CategoryPresentation) -> list[Arrow]:
    return sorted(cat.generators, key=lambda a: a.label)


def check_category_laws(
    cat: CategoryPresentation,
    ctx: EvalContext,
    max_instances: int = DEFAULT_MAX_INSTANCES,
) -> LawReport:
    """Check identity, associativity, and declared relations on witnesses.

    Identity and associativity hold by construction at the path level
    (identities are empty paths and composition is concatenation), so their
    instances certify the evaluation context is deterministic and well wired.
    The declared relations are the substantive equations: both sides are
    evaluated on every witness of the shared domain.
    """
    report = LawReport(title="category laws")
    budget = _InstanceBudget(max_instances)
    gens = _sorted_generators(cat)

    for f in gens:
        fpath = as_path(f)
        left_unit = compose(cat.identity(f.dom), fpath)
        right_unit = compose(fpath, cat.identity(f.cod))
        for x in ctx.witnesses(f.dom):
            if not budget.take():
                break
            report.instances.append(
                LawInstance(
                    law="identity-left",
                    subject=f"1_{f.dom} ; {f.label} = {f.label}",
                    witness=x,
                    left=evaluate_path(left_unit, x, ctx),
                    right=evaluate_path(fpath, x, ctx),
                )
            )
            if not budget.take():
                break
            report.instances.append(
                LawInstance(
                    law="identity-right",
                    subject=f"{f.label} ; 1_{f.cod} = {f.label}",
                    witness=x,
                    left=evaluate_path(right_unit, x, ctx),
                    right=evaluate_path(fpath, x, ctx),
                )
            )

    for f, g, h in itertools.product(gens, repeat=3):
        if f.cod != g.dom or g.cod != h.dom:
            continue
        lhs = compose(compose(as_path(f), as_path(g)), as_path(h))
        rhs = compose(as_path(f), compose(as_path(g), as_path(h)))
        for x in ctx.witnesses(f.dom):
            if not budget.take():
                break
            report.instances.append(
                LawInstance(
                    law="associativity",
                    subject=f"({f.label};{g.label});{h.label} = {f.label};({g.label};{h.label})",
                    witness=x,
                    left=evaluate_path(lhs, x, ctx),
                    right=evaluate_path(rhs, x, ctx),
                )
            )

    for lhs, rhs in cat.relations:
        for x in ctx.witnesses(lhs.dom):
            if not budget.take():
                break
            report.instances.append(
                LawInstance(
                    law="relation",
                    subject=f"{lhs} = {rhs}",
                    witness=x,
                    left=evaluate_path(lhs, x, ctx),
                    right=evaluate_path(rhs, x, ctx),
                )
            )

    report.truncated = budget.exhausted
    return report


@dataclass(frozen=True)
class FunctorDef:
    """A functor between presentations, given on objects and generators.

    ``arrow_map`` sends each source generator label to a path in the target;
    ``notes`` may carry human-readable provenance for each mapping (used by
    the duality builder).
    """

    source: CategoryPresentation
    target: CategoryPresentation
    object_map: Mapping[str, str]
    arrow_map: Mapping[str, Path]
    notes: Mapping[str, str] = field(default_factory=dict)

    def validate(self) -> None:
        for obj in self.source.objects:
            if obj not in self.object_map:
                raise IllFormedFunctorError(f"object {obj!r} is not mapped")
            if self.object_map[obj] not in self.target.objects:
                raise IllFormedFunctorError(
                    f"object {obj!r} maps outside the target presentation"
                )
        for gen in self.source.generators:
            if gen.label not in self.arrow_map:
                raise IllFormedFunctorError(f"arrow {gen.label!r} is not mapped")
            image = self.arrow_map[gen.label]
            if image.dom != self.object_map[gen.dom] or image.cod != self.object_map[gen.cod]:
                raise IllFormedFunctorError(
                    f"arrow {gen.label!r} maps to {image.dom}->{image.cod}, "
                    f"expected {self.object_map[gen.dom]}->{self.object_map[gen.cod]}"
                )

    def apply_object(self, obj: str) -> str:
        if obj not in self.object_map:
            raise IllFormedFunctorError(f"object {obj!r} is not mapped")
        return self.object_map[obj]

    def apply_path(self, path: Path) -> Path:
        out = self.target.identity(self.apply_object(path.dom))
        for arrow in path.arrows:
            if arrow.label not in self.arrow_map:
                raise IllFormedFunctorError(f"arrow {arrow.label!r} is not mapped")
            out = compose(out, self.arrow_map[arrow.label])
        return out

    @staticmethod
    def identity_functor(cat: CategoryPresentation) -> "FunctorDef":
        return FunctorDef(
            source=cat,
            target=cat,
            object_map={o: o for o in cat.objects},
            arrow_map={a.label: as_path(a) for a in cat.generators},
        )


def check_functor_laws(
    F: FunctorDef,
    ctx: EvalContext,
    max_instances: int = DEFAULT_MAX_INSTANCES,
) -> LawReport:
    """Verify identity and composition preservation on target witnesses.

    The context evaluates the *target* presentation. Preservation of declared
    source relations is included: it is where a mis-built functor actually
    shows up once identities and composites are paths.
    """
    F.validate()
    report = LawReport(title="functor laws")
    budget = _InstanceBudget(max_instances)

    for obj in sorted(F.source.objects):
        image = F.apply_path(F.source.identity(obj))
        if not budget.take():
            break
        report.instances.append(
            LawInstance(
                law="functor-identity",
                subject=f"F(1_{obj}) = 1_{F.apply_object(obj)}",
                witness="",
                left=str(image),
                right=str(F.target.identity(F.apply_object(obj))),
            )
        )

    gens = _sorted_generators(F.source)
    for f, g in itertools.product(gens, repeat=2):
        if f.cod != g.dom:
            continue
        composite_image = F.apply_path(compose(as_path(f), as_path(g)))
        image_composite = compose(F.apply_path(as_path(f)), F.apply_path(as_path(g)))
        for x in ctx.witnesses(F.apply_object(f.dom)):
            if not budget.take():
                break
            report.instances.append(
                LawInstance(
                    law="functor-composition",
                    subject=f"F({f.label};{g.label}) = F({f.label});F({g.label})",
                    witness=x,
                    left=evaluate_path(composite_image, x, ctx),
                    right=evaluate_path(image_composite, x, ctx),
                )
            )

    for lhs, rhs in F.source.relations:
        left_image = F.apply_path(lhs)
        right_image = F.apply_path(rhs)
        for x in ctx.witnesses(F.apply_object(lhs.dom)):
            if not budget.take():
                break
            report.instances.append(
                LawInstance(
                    law="functor-relation",
                    subject=f"F({lhs}) = F({rhs})",
                    witness=x,
                    left=evaluate_path(left_image, x, ctx),
                    right=evaluate_path(right_image, x, ctx),
                )
            )

    report.truncated = budget.exhausted
    return report


@dataclass(frozen=True)
class NatTransDef:
    """A natural transformation between two parallel functors."""

    F: FunctorDef
    G: FunctorDef
    components: Mapping[str, Path]

    def validate(self) -> None:
        if self.F.source is not self.G.source and self.F.source != self.G.source:
            raise IncompleteTransformationError("functors do not share a source")
        if self.F.target is not self.G.target and self.F.target != self.G.target:
            raise IncompleteTransformationError("functors do not share a target")
        for obj in self.F.source.objects:
            if obj not in self.components:
                raise IncompleteTransformationError(f"no component at {obj!r}")
            comp = self.components[obj]
            if comp.dom != self.F.apply_object(obj) or comp.cod != self.G.apply_object(obj):
                raise IncompleteTransformationError(
                    f"component at {obj!r} has endpoints {comp.dom}->{comp.cod}, "
                    f"expected {self.F.apply_object(obj)}->{self.G.apply_object(obj)}"
                )

    @staticmethod
    def identity_transformation(F: FunctorDef) -> "NatTransDef":
        comps = {o: F.target.identity(F.apply_object(o)) for o in F.source.objects}
        return NatTransDef(F, F, comps)


def check_naturality(
    alpha: NatTransDef,
    ctx: EvalContext,
    max_instances: int = DEFAULT_MAX_INSTANCES,
) -> LawReport:
    """Check the naturality square for every source generator on witnesses."""
    alpha.validate()
    report = LawReport(title="naturality")
    budget = _InstanceBudget(max_instances)

    for f in _sorted_generators(alpha.F.source):
        top_then_right = compose(alpha.F.apply_path(as_path(f)), alpha.components[f.cod])
        left_then_bottom = compose(alpha.components[f.dom], alpha.G.apply_path(as_path(f)))
        for x in ctx.witnesses(alpha.F.apply_object(f.dom)):
            if not budget.take():
                break
            report.instances.append(
                LawInstance(
                    law="naturality",
                    subject=f"alpha_{f.cod} o F({f.label}) = G({f.label}) o alpha_{f.dom}",
                    witness=x,
                    left=evaluate_path(top_then_right, x, ctx),
                    right=evaluate_path(left_then_bottom, x, ctx),
                )
            )

    report.truncated = budget.exhausted
    return report


def _identity_witness(v: str) -> str:
    return v


@dataclass(frozen=True)
class MonoidalStructure:
    """Tensor data on a carrier of strings plus the unit and coherence maps.

    The unitors and associator are witness functions on carrier values; for
    plain string concatenation they are identities and the laws hold exactly.
    """

    tensor_values: Callable[[str, str], str]
    unit_value: str
    unit_object: str = "unit"
    left_unitor: Callable[[str], str] = _identity_witness
    right_unitor: Callable[[str], str] = _identity_witness
    associator: Callable[[str], str] = _identity_witness


def check_monoidal_laws(
    ms: MonoidalStructure,
    values: Sequence[str],
    max_instances: int = DEFAULT_MAX_INSTANCES,
) -> LawReport:
    """Unit and associator laws evaluated on carrier witness values."""
    report = LawReport(title="monoidal laws")
    budget = _InstanceBudget(max_instances)

    for x in values:
        if not budget.take():
            break
        report.instances.append(
            LawInstance(
                law="unit-left",
                subject="l(I (x) x) = x",
                witness=x,
                left=ms.left_unitor(ms.tensor_values(ms.unit_value, x)),
                right=x,
            )
        )
        if not budget.take():
            break
        report.instances.append(
            LawInstance(
                law="unit-right",
                subject="r(x (x) I) = x",
                witness=x,
                left=ms.right_unitor(ms.tensor_values(x, ms.unit_value)),
                right=x,
            )
        )

    for x, y, z in itertools.product(values, repeat=3):
        if not budget.take():
            break
        left = ms.associator(ms.tensor_values(ms.tensor_values(x, y), z))
        right = ms.tensor_values(x, ms.tensor_values(y, z))
        report.instances.append(
            LawInstance(
                law="associator",
                subject="a((x (x) y) (x) z) = x (x) (y (x) z)",
                witness=f"{x!r},{y!r},{z!r}",
                left=left,
                right=right,
            )
        )

    report.truncated = budget.exhausted
    return report


@dataclass(frozen=True)
class ExponentialWitness:
    """Names the data of one exponential object Z^X.

    ``open_slot`` is the template slot realizing the exponent X: currying
    binds every other slot and leaves this one free in the returned
    descriptions.
    """

    base: str
    exponent: str
    obj: str
    open_slot: str


@dataclass(frozen=True)
class Lambda:
    """A one-argument map into an exponential object.

    Calling it on a string fills the bound slot of the underlying two-slot
    template and returns a one-slot description (an element of Z^X).
    """

    template: str
    open_slot: str
    bound_slot: str

    def __call__(self, y: str) -> str:
        return render(self.template, {self.bound_slot: y}, partial=True)


@dataclass(frozen=True)
class Uncurried:
    """The two-argument arrow recovered from a lambda via evaluation."""

    source: Lambda

    @property
    def template(self) -> str:
        return self.source.template

    def apply(self, x: str, y: str, ctx: EvalContext) -> str:
        return evaluate(self.source(y), x, ctx)


def _template_of(f) -> str:
    template = getattr(f, "template", None)
    if template is None and isinstance(f, str):
        template = f
    if not isinstance(template, str):
        raise CurryShapeError("curry needs an arrow with a template description")
    return template


def curry(f, w: ExponentialWitness) -> Lambda:
    """Curry a two-slot arrow over the witness's exponent slot.

    The domain of ``f`` must be the tensor shape the witness describes: a
    template with exactly two slots, one of which is ``w.open_slot``.
    """
    template = _template_of(f)
    slots = find_slots(template)
    if len(slots) != 2:
        raise CurryShapeError(
            f"expected a two-slot template, found slots {slots!r}"
        )
    if w.open_slot not in slots:
        raise CurryShapeError(
            f"witness slot {w.open_slot!r} is not a slot of the template"
        )
    slot_objects = getattr(f, "slot_objects", None)
    if slot_objects is not None:
        bound = {name: obj for name, obj in slot_objects}
        if bound.get(w.open_slot) != w.exponent:
            raise CurryShapeError(
                f"slot {w.open_slot!r} ranges over {bound.get(w.open_slot)!r}, "
                f"but the witness exponent is {w.exponent!r}"
            )
    bound_slot = next(s for s in slots if s != w.open_slot)
    return Lambda(template=template, open_slot=w.open_slot, bound_slot=bound_slot)


def uncurry(lam: Lambda, w: ExponentialWitness) -> Uncurried:
    if lam.open_slot != w.open_slot:
        raise CurryShapeError(
            f"lambda keeps slot {lam.open_slot!r} open, witness expects {w.open_slot!r}"
        )
    return Uncurried(source=lam)


def apply_two_slot(f, values: Mapping[str, str], ctx: EvalContext) -> str:
    """Run a two-slot arrow directly: render both slots at once, then complete."""
    template = _template_of(f)
    slots = find_slots(template)
    if set(slots) != set(values):
        raise EvaluationError(
            f"slot mismatch: template has {slots!r}, values for {sorted(values)!r}"
        )
    return ctx.complete(render(template, dict(values)))


def check_curry_roundtrip(
    f,
    w: ExponentialWitness,
    ctx: EvalContext,
    xs: Sequence[str],
    ys: Sequence[str],
) -> LawReport:
    """uncurry(curry(f)) must agree with f on all witness pairs."""
    report = LawReport(title="curry round-trip")
    lam = curry(f, w)
    back = uncurry(lam, w)
    template = _template_of(f)
    for x in xs:
        for y in ys:
            direct = apply_two_slot(
                f, {w.open_slot: x, lam.bound_slot: y}, ctx
            )
            report.instances.append(
                LawInstance(
                    law="curry-roundtrip",
                    subject=f"uncurry(curry({template!r}))",
                    witness=f"{x!r},{y!r}",
                    left=back.apply(x, y, ctx),
                    right=direct,
                )
            )
    return report
