"""Loading of the golden corpus: canonical text files under data/.

Files use the mpoly text grammar; matrix files hold one row per line with
entries separated by commas, list files one polynomial per line, section
files group lines under ``[name]`` headers.
"""

from __future__ import annotations

from importlib import resources

from .mpoly import SparsePoly, parse_poly


def _read(name: str) -> str:
    return resources.files(__package__).joinpath("data", name).read_text(encoding="utf-8")


def data_lines(name: str) -> list[str]:
    out = []
    for raw in _read(name).splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append(line)
    return out


def load_poly(name: str, variables: list[str]) -> SparsePoly:
    lines = data_lines(name)
    return parse_poly(" ".join(lines), variables)


def load_poly_list(name: str, variables: list[str]) -> list[SparsePoly]:
    return [parse_poly(line, variables) for line in data_lines(name)]


def load_matrix(name: str, variables: list[str]) -> list[list[SparsePoly]]:
    rows = []
    for line in data_lines(name):
        rows.append([parse_poly(cell, variables) for cell in line.split(",")])
    return rows


def load_sections(name: str) -> dict[str, list[str]]:
    sections: dict[str, list[str]] = {}
    current = None
    for line in data_lines(name):
        if line.startswith("[") and line.endswith("]"):
            current = line[1:-1]
            sections[current] = []
        else:
            if current is None:
                raise ValueError(f"{name}: line outside a section: {line!r}")
            sections[current].append(line)
    return sections


def load_labeled(name: str) -> dict[str, str]:
    """Lines of the form ``label: payload``."""
    out = {}
    for line in data_lines(name):
        label, _, payload = line.partition(":")
        out[label.strip()] = payload.strip()
    return out
