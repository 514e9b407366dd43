import json
from pathlib import Path
from typing import Optional, Union

from pydantic import BaseModel

from lrbspectra.schema.semigroup import SemigroupTableFile, WeightsFile
from lrbspectra.services.semigroup_service import MultiplicationTable
from lrbspectra.services.spectra_service import WeightedElement
from lrbspectra.utils.rationals import parse_rational

PathLike = Union[str, Path]


def table_from_model(model: SemigroupTableFile) -> MultiplicationTable:
    return MultiplicationTable(tuple(model.labels), model.table, model.identity)


def table_to_model(T: MultiplicationTable) -> SemigroupTableFile:
    return SemigroupTableFile(
        n=T.n,
        labels=list(T.labels),
        identity=T.identity,
        table=[list(row) for row in T.rows],
    )


def load_table(path: PathLike) -> MultiplicationTable:
    """Read a table file; raises pydantic ValidationError or JSONDecodeError on bad input."""
    text = Path(path).read_text(encoding="utf-8")
    return table_from_model(SemigroupTableFile.model_validate_json(text))


def dump_table(T: MultiplicationTable) -> str:
    """Canonical JSON: one table row per line so files stay diffable."""
    model = table_to_model(T)
    rows = ",\n    ".join(json.dumps(row) for row in model.table)
    return (
        "{\n"
        f'  "n": {model.n},\n'
        f'  "labels": {json.dumps(model.labels, ensure_ascii=False)},\n'
        f'  "identity": {model.identity},\n'
        f'  "table": [\n    {rows}\n  ]\n'
        "}\n"
    )


def weights_from_mapping(weights: dict, T: MultiplicationTable) -> WeightedElement:
    """Label-keyed rational strings -> WeightedElement; unknown labels raise UnknownLabelError."""
    coefficients = {}
    for label, text in weights.items():
        s = T.index_of(label)
        coefficients[s] = coefficients.get(s, 0) + parse_rational(text)
    return WeightedElement(coefficients)


def load_weights(path: PathLike, T: MultiplicationTable) -> WeightedElement:
    model = WeightsFile.model_validate_json(Path(path).read_text(encoding="utf-8"))
    return weights_from_mapping(model.weights, T)


def dump_report(report: BaseModel) -> str:
    return report.model_dump_json(indent=2) + "\n"


def write_output(text: str, out: Optional[PathLike]) -> None:
    if out is None:
        print(text, end="")
    else:
        Path(out).write_text(text, encoding="utf-8")
