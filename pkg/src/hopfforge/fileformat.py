"""Line-oriented structure-constant files.

One structure per file.  Header lines are `# key: value`; sections start
with `SECTION <NAME> [arg...]` and carry rows of indices followed by one
scalar in the cyclotomic grammar: a sum of terms `<rat>*z^<k>` where `z`
denotes the primitive root for the conductor declared in the header,
e.g. ``2*z^3 - 1`` or ``-1/2*z + 5``.  Files are deterministic: writing
the same structure twice gives byte-identical output.
"""

from __future__ import annotations

import re
from fractions import Fraction
from pathlib import Path
from typing import Optional, Union

from .cyclotomic import CycScalar, euler_phi
from .hopf import HopfSC, BialgebraSC
from .linalg import Mat, Tensor3, Vec, cone, czero, zeros
from .cocycle import Cocycle, PreBialgebra
from .yd import YDModule


class ParseError(ValueError):
    pass


# -- scalar grammar ------------------------------------------------------------

_TERM_RE = re.compile(
    r"^(?P<sign>[+-]?)\s*(?:(?P<rat>\d+(?:/\d+)?)\s*\*?\s*)?(?:(?P<z>z)(?:\^(?P<exp>\d+))?)?$"
)


def parse_scalar(text: str, conductor: int) -> CycScalar:
    s = text.strip()
    if not s:
        raise ParseError("empty scalar")
    # split into signed terms
    terms = re.findall(r"[+-]?[^+-]+|[+-](?=[+-])", s.replace(" ", ""))
    total = CycScalar.zero(conductor)
    for term in terms:
        if not term:
            continue
        m = _TERM_RE.match(term)
        if not m or (m.group("rat") is None and m.group("z") is None):
            raise ParseError(f"bad scalar term {term!r}")
        sign = -1 if m.group("sign") == "-" else 1
        rat = Fraction(m.group("rat")) if m.group("rat") else Fraction(1)
        if m.group("z"):
            exp = int(m.group("exp") or 1)
            base = CycScalar.zeta_power(conductor, exp)
        else:
            base = CycScalar.one(conductor)
        total = total + base * CycScalar.from_rational(sign * rat, 1)
    return total


def format_scalar(c: CycScalar, conductor: int) -> str:
    c = c.promote(conductor) if conductor % c.L == 0 and c.L != conductor else c
    if c.L != conductor:
        raise ParseError(f"scalar at conductor {c.L} cannot be written at {conductor}")
    if c.is_zero():
        return "0"
    parts = []
    for k, f in enumerate(c.coeffs()):
        if f == 0:
            continue
        mag = abs(f)
        if k == 0:
            body = str(mag)
        else:
            zpart = "z" if k == 1 else f"z^{k}"
            body = zpart if mag == 1 else f"{mag}*{zpart}"
        if not parts:
            parts.append(body if f > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if f > 0 else f"- {body}")
    return " ".join(parts)


# -- writing -------------------------------------------------------------------


def _tensor_rows(t: Tensor3, conductor: int) -> list[str]:
    out = []
    for (i, j, k) in sorted(t.data):
        out.append(f"{i} {j} {k} {format_scalar(t.data[(i, j, k)], conductor)}")
    return out


def _vec_rows(v: Vec, conductor: int) -> list[str]:
    out = []
    for i, c in enumerate(v):
        if c:
            out.append(f"{i} {format_scalar(c, conductor)}")
    return out


def _mat_rows(m: Mat, conductor: int) -> list[str]:
    out = []
    for i in range(m.nrows):
        for j in range(m.ncols):
            c = m.rows[i][j]
            if c:
                out.append(f"{i} {j} {format_scalar(c, conductor)}")
    return out


def write_hopf(H: Union[HopfSC, BialgebraSC], path: Union[str, Path],
               kind: str = "hopf", maps: Optional[dict] = None) -> None:
    """Write an algebra/bialgebra/Hopf structure file.

    `maps` may carry {"name": (Mat, ref_path)} entries emitted as MAP
    sections referencing a second file by relative path.
    """
    conductor = getattr(H, "conductor", 1)
    lines = [
        "# format: hopfforge-sc v1",
        f"# kind: {kind}",
        f"# conductor: {conductor}",
        f"# dim: {H.dim}",
    ]
    labels = getattr(H, "labels", None)
    if labels:
        lines.append("# labels: " + " ".join(labels))
    flags = []
    if getattr(H, "finite_dim", True):
        flags.append("finite_dim")
    if getattr(H, "cosemisimple", False):
        flags.append("cosemisimple")
    if flags:
        lines.append("# flags: " + " ".join(flags))
    lines.append("SECTION MULT")
    lines += _tensor_rows(H.mult, conductor)
    lines.append("SECTION UNIT")
    lines += _vec_rows(H.unit, conductor)
    lines.append("SECTION COMULT")
    lines += _tensor_rows(H.comult, conductor)
    lines.append("SECTION COUNIT")
    lines += _vec_rows(H.counit, conductor)
    if getattr(H, "antipode", None) is not None:
        lines.append("SECTION ANTIPODE")
        lines += _mat_rows(H.antipode, conductor)
    for name, gl in getattr(H, "group_likes", {}).items():
        lines.append(f"SECTION GROUPLIKE {name}")
        lines += _vec_rows(gl, conductor)
    for name, chi in getattr(H, "characters", {}).items():
        lines.append(f"SECTION CHARACTER {name}")
        lines += _vec_rows(chi, conductor)
    for name, (mat, ref) in (maps or {}).items():
        lines.append(f"SECTION MAP {name} {ref}")
        lines += _mat_rows(mat, conductor)
    Path(path).write_text("\n".join(lines) + "\n")


def write_prebialgebra(P: PreBialgebra, path: Union[str, Path], base_ref: str) -> None:
    conductor = getattr(P.H, "conductor", 1)
    lines = [
        "# format: hopfforge-sc v1",
        "# kind: prebialgebra",
        f"# conductor: {conductor}",
        f"# dim: {P.dim}",
        f"# base: {base_ref}",
        "SECTION MULT",
        *_tensor_rows(P.mult, conductor),
        "SECTION UNIT",
        *_vec_rows(P.unit, conductor),
        "SECTION COMULT",
        *_tensor_rows(P.comult, conductor),
        "SECTION COUNIT",
        *_vec_rows(P.counit, conductor),
        "SECTION ACTION",
        *_tensor_rows(P.yd.action, conductor),
        "SECTION COACTION",
        *_tensor_rows(P.yd.coaction, conductor),
    ]
    Path(path).write_text("\n".join(lines) + "\n")


def write_cocycle(xi: Cocycle, path: Union[str, Path], conductor: int,
                  r_ref: str = "", base_ref: str = "") -> None:
    lines = [
        "# format: hopfforge-sc v1",
        "# kind: cocycle",
        f"# conductor: {conductor}",
        f"# dim: {xi.r_dim}",
        f"# base_dim: {xi.h_dim}",
    ]
    if r_ref:
        lines.append(f"# r: {r_ref}")
    if base_ref:
        lines.append(f"# base: {base_ref}")
    lines.append("SECTION XI")
    lines += _tensor_rows(xi.xi, conductor)
    Path(path).write_text("\n".join(lines) + "\n")


def write_map(m: Mat, path: Union[str, Path], conductor: int,
              domain_ref: str = "", codomain_ref: str = "") -> None:
    lines = [
        "# format: hopfforge-sc v1",
        "# kind: map",
        f"# conductor: {conductor}",
        f"# rows: {m.nrows}",
        f"# cols: {m.ncols}",
    ]
    if domain_ref:
        lines.append(f"# domain: {domain_ref}")
    if codomain_ref:
        lines.append(f"# codomain: {codomain_ref}")
    lines.append("SECTION MAP")
    lines += _mat_rows(m, conductor)
    Path(path).write_text("\n".join(lines) + "\n")


# -- reading -------------------------------------------------------------------


class AlgebraFile:
    """Parsed structure file: header, sections, and typed accessors."""

    def __init__(self, path: Union[str, Path]):
        self.path = Path(path)
        self.header: dict[str, str] = {}
        self.sections: list[tuple[str, list[str], list[str]]] = []
        self._parse()

    def _parse(self) -> None:
        current: Optional[tuple[str, list[str], list[str]]] = None
        for ln, raw in enumerate(self.path.read_text().splitlines(), 1):
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                body = line[1:].strip()
                if ":" in body:
                    k, v = body.split(":", 1)
                    self.header[k.strip()] = v.strip()
                continue
            if line.startswith("SECTION"):
                parts = line.split()
                if len(parts) < 2:
                    raise ParseError(f"{self.path}:{ln}: SECTION needs a name")
                current = (parts[1], parts[2:], [])
                self.sections.append(current)
                continue
            if current is None:
                raise ParseError(f"{self.path}:{ln}: data before any SECTION")
            current[2].append(line)

    @property
    def kind(self) -> str:
        return self.header.get("kind", "hopf")

    @property
    def conductor(self) -> int:
        return int(self.header.get("conductor", "1"))

    @property
    def dim(self) -> int:
        return int(self.header["dim"])

    def flags(self) -> set[str]:
        return set(self.header.get("flags", "").split())

    def labels(self) -> Optional[list[str]]:
        raw = self.header.get("labels")
        return raw.split() if raw else None

    def section(self, name: str) -> Optional[tuple[list[str], list[str]]]:
        for sec, args, rows in self.sections:
            if sec == name:
                return args, rows
        return None

    def _tensor(self, name: str, shape: tuple[int, int, int]) -> Tensor3:
        found = self.section(name)
        t = Tensor3(shape)
        if found is None:
            return t
        _, rows = found
        for row in rows:
            parts = row.split(None, 3)
            if len(parts) != 4:
                raise ParseError(f"{self.path}: bad tensor row {row!r} in {name}")
            i, j, k = int(parts[0]), int(parts[1]), int(parts[2])
            t.add_to((i, j, k), parse_scalar(parts[3], self.conductor))
        return t

    def _vector(self, name: str, n: int) -> Vec:
        found = self.section(name)
        v = zeros(n)
        if found is None:
            return v
        _, rows = found
        for row in rows:
            parts = row.split(None, 1)
            if len(parts) != 2:
                raise ParseError(f"{self.path}: bad vector row {row!r} in {name}")
            i = int(parts[0])
            if not 0 <= i < n:
                raise ParseError(f"{self.path}: index {i} out of range in {name}")
            v[i] = v[i] + parse_scalar(parts[1], self.conductor)
        return v

    def _matrix_rows(self, rows: list[str], nrows: int, ncols: int) -> Mat:
        m = Mat.zero(nrows, ncols)
        for row in rows:
            parts = row.split(None, 2)
            if len(parts) != 3:
                raise ParseError(f"{self.path}: bad map row {row!r}")
            i, j = int(parts[0]), int(parts[1])
            if not (0 <= i < nrows and 0 <= j < ncols):
                raise ParseError(f"{self.path}: map index ({i},{j}) out of range")
            m.rows[i][j] = m.rows[i][j] + parse_scalar(parts[2], self.conductor)
        return m

    def to_hopf(self) -> HopfSC:
        n = self.dim
        mult = self._tensor("MULT", (n, n, n))
        comult = self._tensor("COMULT", (n, n, n))
        unit = self._vector("UNIT", n)
        counit = self._vector("COUNIT", n)
        antipode = None
        found = self.section("ANTIPODE")
        if found is not None:
            antipode = self._matrix_rows(found[1], n, n)
        group_likes = {}
        characters = {}
        for sec, args, rows in self.sections:
            if sec == "GROUPLIKE":
                name = args[0] if args else f"g{len(group_likes)}"
                v = zeros(n)
                for row in rows:
                    parts = row.split(None, 1)
                    v[int(parts[0])] = v[int(parts[0])] + parse_scalar(parts[1], self.conductor)
                group_likes[name] = v
            elif sec == "CHARACTER":
                name = args[0] if args else f"chi{len(characters)}"
                v = zeros(n)
                for row in rows:
                    parts = row.split(None, 1)
                    v[int(parts[0])] = v[int(parts[0])] + parse_scalar(parts[1], self.conductor)
                characters[name] = v
        flags = self.flags()
        return HopfSC(n, mult, unit, comult, counit, antipode,
                      labels=self.labels(), conductor=self.conductor,
                      group_likes=group_likes, characters=characters,
                      finite_dim="finite_dim" in flags or not flags,
                      cosemisimple="cosemisimple" in flags)

    def to_map(self) -> Mat:
        nrows = int(self.header["rows"])
        ncols = int(self.header["cols"])
        found = self.section("MAP")
        return self._matrix_rows(found[1] if found else [], nrows, ncols)

    def maps(self, shape_of) -> dict[str, tuple[Mat, str]]:
        """MAP sections inside a structure file; shape_of(name) -> (nrows, ncols)."""
        out = {}
        for sec, args, rows in self.sections:
            if sec == "MAP":
                name = args[0] if args else f"map{len(out)}"
                ref = args[1] if len(args) > 1 else ""
                nrows, ncols = shape_of(name)
                out[name] = (self._matrix_rows(rows, nrows, ncols), ref)
        return out

    def to_prebialgebra(self, H: HopfSC) -> PreBialgebra:
        n = self.dim
        mult = self._tensor("MULT", (n, n, n))
        comult = self._tensor("COMULT", (n, n, n))
        unit = self._vector("UNIT", n)
        counit = self._vector("COUNIT", n)
        action = self._tensor("ACTION", (H.dim, n, n))
        coaction = self._tensor("COACTION", (n, H.dim, n))
        yd = YDModule(H, n, action, coaction)
        return PreBialgebra(H, yd, mult, unit, comult, counit)

    def to_cocycle(self) -> Cocycle:
        n = self.dim
        base_dim = int(self.header.get("base_dim", "0"))
        if not base_dim:
            raise ParseError(f"{self.path}: cocycle file needs a base_dim header")
        return Cocycle(self._tensor("XI", (n, n, base_dim)))

    def base_ref(self) -> Optional[str]:
        return self.header.get("base")
