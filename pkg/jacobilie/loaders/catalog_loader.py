"""
Catalog loader for JacobiLie.

Reads the YAML data files (algebras, classification rows, automorphism
families, vielbeins, Hamiltonian examples and reductions) into a catalog
repository. Every file has the shape

    format_version: 1
    records: [...]

Loading continues past malformed records; failures are collected in the
returned LoaderStats.
"""

import logging
import time
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Any, Callable, Dict, List, Mapping, Optional, Union

import sympy
import yaml

from jacobilie.config import settings
from jacobilie.errors import CatalogError, JacobiError
from jacobilie.models import (
    AlgJacobiStructure,
    EquivalenceClass,
    GroupJacobiStructure,
    LieAlgebra,
    Relation,
    SideCondition,
    TableRow,
)
from jacobilie.models.automorphism import AutomorphismBranch, AutomorphismFamily, FamilyKind
from jacobilie.models.example import (
    HamiltonianExample,
    LinearRelation,
    Reduction,
    ReductionBranch,
    SecondaryClass,
    SecondaryExpectation,
)
from jacobilie.models.geometry import Vielbein
from jacobilie.repository import ICatalogRepository, InMemoryCatalogRepository, RepositoryError
from jacobilie.symexpr import parse, to_expr
from jacobilie.symexpr.symbols import symbol

logger = logging.getLogger(__name__)

FORMAT_VERSION = 1

# Load order matters: rows and examples refer to algebras.
CATALOG_FILES = (
    "algebras",
    "automorphisms",
    "jacobi_structures",
    "vielbeins",
    "examples",
    "reductions",
)


@dataclass
class LoaderStats:
    """
    Statistics from a catalog loading operation.

    Attributes:
        total_records: Number of records read
        loaded_successfully: Records added to the repository
        failed_records: Records that failed to parse or were rejected
        duration_ms: Time taken in milliseconds
        errors: Error messages for failed records
    """
    total_records: int = 0
    loaded_successfully: int = 0
    failed_records: int = 0
    duration_ms: float = 0.0
    errors: List[str] = field(default_factory=list)

    @property
    def success_rate(self) -> float:
        """Calculate success rate as a percentage."""
        if self.total_records == 0:
            return 0.0
        return (self.loaded_successfully / self.total_records) * 100

    def merge(self, other: "LoaderStats") -> "LoaderStats":
        return LoaderStats(
            total_records=self.total_records + other.total_records,
            loaded_successfully=self.loaded_successfully + other.loaded_successfully,
            failed_records=self.failed_records + other.failed_records,
            duration_ms=self.duration_ms + other.duration_ms,
            errors=self.errors + other.errors,
        )

    def __str__(self) -> str:
        """Human-readable string representation."""
        return (
            f"LoaderStats(total={self.total_records}, "
            f"loaded={self.loaded_successfully}, "
            f"failed={self.failed_records}, "
            f"duration={self.duration_ms:.2f}ms, "
            f"success_rate={self.success_rate:.1f}%)"
        )


class CatalogLoader:
    """
    Loader for catalog records from YAML files.

    Attributes:
        repository: Catalog repository to load records into
    """

    def __init__(self, repository: ICatalogRepository):
        self.repository = repository
        self._parsers: Dict[str, Callable[[Mapping[str, Any]], None]] = {
            "algebras": self._add_algebra,
            "automorphisms": self._add_automorphisms,
            "jacobi_structures": self._add_row,
            "vielbeins": self._add_vielbein,
            "examples": self._add_example,
            "reductions": self._add_reduction,
        }
        logger.info("CatalogLoader initialized")

    def load_directory(self, directory: Union[str, Path]) -> LoaderStats:
        """
        Load every catalog file present in a directory, in dependency order.

        Raises:
            FileNotFoundError: If the directory does not exist
        """
        path = Path(directory)
        if not path.is_dir():
            raise FileNotFoundError(f"Catalog directory not found: {directory}")
        stats = LoaderStats()
        for kind in CATALOG_FILES:
            file_path = path / f"{kind}.yaml"
            if file_path.exists():
                stats = stats.merge(self.load_from_file(file_path, kind))
        return stats

    def load_from_file(self, file_path: Union[str, Path], kind: Optional[str] = None) -> LoaderStats:
        """
        Load records from one YAML file.

        Args:
            file_path: Path to the YAML file
            kind: Record kind; taken from the file stem when None

        Raises:
            FileNotFoundError: If the file doesn't exist
            yaml.YAMLError: If the file isn't valid YAML
            ValueError: If the file layout or kind is invalid
        """
        path = Path(file_path)
        if not path.exists():
            raise FileNotFoundError(f"Catalog file not found: {file_path}")
        kind = kind or path.stem

        logger.info("Loading %s from %s", kind, path)
        with open(path, "r", encoding="utf-8") as f:
            data = yaml.safe_load(f)

        if not isinstance(data, dict) or "records" not in data:
            raise ValueError(f"Expected a mapping with 'records' in {file_path}")
        version = data.get("format_version")
        if version != FORMAT_VERSION:
            raise ValueError(f"Unsupported format_version {version!r} in {file_path}")
        return self.load_from_dict(kind, data["records"])

    def load_from_dict(self, kind: str, records: List[Mapping[str, Any]]) -> LoaderStats:
        """
        Load records of one kind from already parsed data.

        Raises:
            ValueError: If records is not a list or the kind is unknown
        """
        if kind not in self._parsers:
            raise ValueError(f"Unknown record kind: {kind}")
        if not isinstance(records, list):
            raise ValueError(f"Expected list of records, got {type(records).__name__}")

        start_time = time.perf_counter()
        add = self._parsers[kind]
        loaded = 0
        errors: List[str] = []

        for i, record in enumerate(records, 1):
            try:
                if not isinstance(record, Mapping):
                    raise ValueError(f"record is a {type(record).__name__}, not a mapping")
                add(record)
                loaded += 1
            except (ValueError, KeyError, TypeError, JacobiError, RepositoryError) as e:
                label = _record_label(record, i)
                message = f"Failed to load {kind} record '{label}': {e}"
                errors.append(message)
                logger.warning(message)

        duration_ms = (time.perf_counter() - start_time) * 1000
        stats = LoaderStats(
            total_records=len(records),
            loaded_successfully=loaded,
            failed_records=len(errors),
            duration_ms=duration_ms,
            errors=errors,
        )
        logger.info("Loaded %s: %s", kind, stats)
        return stats

    def _add_algebra(self, record: Mapping[str, Any]) -> None:
        dim = int(record["dim"])
        basis = {f"X{k}": sympy.Symbol(f"X{k}") for k in range(1, dim + 1)}
        brackets = {}
        for key, text in (record.get("brackets") or {}).items():
            i, j = _pair(key)
            combination = sympy.expand(_expr(text, extra=basis))
            coefficients = [combination.coeff(basis[f"X{k}"]) for k in range(1, dim + 1)]
            rest = sympy.expand(
                combination - sum(c * basis[f"X{k + 1}"] for k, c in enumerate(coefficients))
            )
            if rest != 0:
                raise ValueError(f"Bracket [X{i},X{j}] is not linear in the basis: {text}")
            brackets[(i, j)] = coefficients
        algebra = LieAlgebra.from_brackets(
            name=str(record["name"]),
            dim=dim,
            brackets=brackets,
            parameter=record.get("parameter"),
            parameter_condition=record.get("parameter_condition", ""),
            description=record.get("description", ""),
        )
        self.repository.add_algebra(algebra)

    def _add_row(self, record: Mapping[str, Any]) -> None:
        algebra = str(record["algebra"])
        self.repository.get_algebra(algebra)
        classes = tuple(
            EquivalenceClass(id=str(c["id"]), structure=_structure(c))
            for c in record.get("classes") or []
        )
        row = TableRow(
            id=str(record["id"]),
            algebra=algebra,
            family=_structure(record),
            classes=classes,
            flags=tuple(record.get("flags") or ()),
        )
        self.repository.add_row(row)

    def _add_automorphisms(self, record: Mapping[str, Any]) -> None:
        branches = []
        for branch in record.get("branches") or []:
            matrix = sympy.ImmutableMatrix([[_expr(v) for v in row] for row in branch["matrix"]])
            nonzero = [matrix.det() if v == "det" else _expr(v) for v in branch.get("nonzero") or []]
            branches.append(
                AutomorphismBranch(label=str(branch.get("label", "")), matrix=matrix, nonzero=nonzero)
            )
        family = AutomorphismFamily(
            algebra=str(record["algebra"]),
            kind=FamilyKind(record.get("kind", FamilyKind.PARAMETRIC.value)),
            description=record.get("description", ""),
            branches=tuple(branches),
        )
        if family.is_parametric and not family.branches:
            raise ValueError("Parametric automorphism family without branches")
        self.repository.add_automorphism_family(family)

    def _add_vielbein(self, record: Mapping[str, Any]) -> None:
        matrix = [[_expr(v) for v in row] for row in record["inv_e"]]
        self.repository.add_vielbein(Vielbein(group=str(record["group"]), inv_e=matrix))

    def _add_example(self, record: Mapping[str, Any]) -> None:
        substitutions = {str(k): str(v) for k, v in (record.get("substitutions") or {}).items()}
        renaming = {symbol(k): symbol(v) for k, v in substitutions.items()}

        def fn(text: Any) -> sympy.Expr:
            return _expr(text).subs(renaming, simultaneous=True)

        secondary = tuple(
            SecondaryClass(
                structure=_structure(s["structure"]),
                lifted=_group_structure(s["lifted"], str(record["group"])),
                candidates=[fn(v) for v in s["candidates"]],
                expectation=SecondaryExpectation(s.get("expectation", "no-basis")),
            )
            for s in record.get("secondary") or []
        )
        example = HamiltonianExample(
            number=int(record["number"]),
            algebra=str(record["algebra"]),
            group=str(record["group"]),
            structure=_structure(record["structure"]),
            lifted=_group_structure(record["lifted"], str(record["group"])),
            hamiltonians=[fn(v) for v in record["hamiltonians"]],
            fields=[[fn(v) for v in field_] for field_ in record.get("fields") or []],
            commutators=tuple(_relation(r) for r in record.get("commutators") or []),
            brackets=tuple(_relation(r) for r in record.get("brackets") or []),
            substitutions=substitutions,
            domain=tuple(record.get("domain") or ()),
            notes=tuple(record.get("notes") or ()),
            secondary=secondary,
        )
        self.repository.get_algebra(example.algebra)
        self.repository.add_example(example)

    def _add_reduction(self, record: Mapping[str, Any]) -> None:
        branches = []
        for branch in record["branches"]:
            matrix = branch.get("matrix")
            branches.append(
                ReductionBranch(
                    label=str(branch["label"]),
                    bindings={str(k): _expr(v) for k, v in (branch.get("bindings") or {}).items()},
                    matrix=None if matrix is None else [[_expr(v) for v in row] for row in matrix],
                    determinant=None if branch.get("determinant") is None else _expr(branch["determinant"]),
                    target=None if branch.get("target") is None else _structure(branch["target"]),
                    poisson=bool(branch.get("poisson", False)),
                )
            )
        reduction = Reduction(
            name=str(record["name"]),
            algebra=str(record["algebra"]),
            row=str(record["row"]),
            branches=tuple(branches),
        )
        self.repository.find_structure(reduction.row)
        self.repository.add_reduction(reduction)

    def __repr__(self) -> str:
        """Developer-friendly representation."""
        return f"CatalogLoader(repository={self.repository!r})"


def _expr(value: Any, extra: Optional[Mapping[str, Any]] = None) -> sympy.Expr:
    if isinstance(value, str):
        return parse(value, extra=extra)
    if isinstance(value, int) and not isinstance(value, bool):
        return to_expr(value)
    raise ValueError(f"Expected an expression string or integer, got {value!r}")


def _pair(key: Any) -> tuple:
    text = str(key).strip()
    if len(text) != 2 or not text.isdigit():
        raise ValueError(f"Index pair must look like '12', got {key!r}")
    return int(text[0]), int(text[1])


def _conditions(items: Any) -> List[SideCondition]:
    return [
        SideCondition(
            expr=_expr(c["expr"]),
            relation=Relation(c.get("relation", Relation.NONZERO.value)),
            inferred=bool(c.get("inferred", False)),
        )
        for c in items or []
    ]


def _structure(record: Mapping[str, Any]) -> AlgJacobiStructure:
    reeb = [_expr(v) for v in record["reeb"]]
    lam = {str(k): _expr(v) for k, v in (record.get("lambda") or {}).items()}
    return AlgJacobiStructure.from_components(
        len(reeb), lam, reeb, conditions=tuple(_conditions(record.get("conditions")))
    )


def _group_structure(record: Mapping[str, Any], group: str) -> GroupJacobiStructure:
    reeb = [_expr(v) for v in record["reeb"]]
    lam = {str(k): _expr(v) for k, v in (record.get("lambda") or {}).items()}
    return GroupJacobiStructure.from_components(len(reeb), lam, reeb, group=group)


def _relation(record: Mapping[str, Any]) -> LinearRelation:
    left, right = record["pair"]
    return LinearRelation(
        left=int(left),
        right=int(right),
        coefficients={int(k): _expr(v) for k, v in (record.get("result") or {}).items()},
    )


def _record_label(record: Any, index: int) -> str:
    if isinstance(record, Mapping):
        for key in ("id", "name", "algebra", "group", "number"):
            if key in record:
                return str(record[key])
    return f"record_{index}"


def load_catalog(directory: Optional[Union[str, Path]] = None) -> ICatalogRepository:
    """
    Build a repository from a catalog directory.

    Raises:
        CatalogError: If any record fails to load
    """
    repository = InMemoryCatalogRepository()
    stats = CatalogLoader(repository).load_directory(directory or settings.get_catalog_dir())
    if stats.failed_records:
        raise CatalogError("Catalog failed to load: " + "; ".join(stats.errors))
    return repository


@lru_cache(maxsize=1)
def default_repository() -> ICatalogRepository:
    """The bundled catalog, loaded once per process."""
    return load_catalog()
