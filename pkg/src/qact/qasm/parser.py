"""Recursive-descent parser for the OpenQASM 2.0 subset qact understands."""

from __future__ import annotations

import math

from qact.errors import QasmError
from qact.qasm.ast import (
    BUILTIN_GATES,
    PRIMITIVE_ALIASES,
    Barrier,
    BinOp,
    Call,
    Conditional,
    Declaration,
    GateApp,
    GateDef,
    Measure,
    Name,
    Neg,
    Num,
    OpaqueApp,
    Operand,
    ParamExpr,
    Pi,
    QasmProgram,
    Reset,
    Statement,
)
from qact.qasm.lexer import FUNCTIONS, Token, tokenize

ALLOWED_INCLUDES = frozenset({"qelib1.inc"})


def _builtin_signature(name: str) -> tuple[int, int] | None:
    if name in BUILTIN_GATES:
        return BUILTIN_GATES[name]
    if name in PRIMITIVE_ALIASES:
        return BUILTIN_GATES[PRIMITIVE_ALIASES[name]]
    return None


class _Parser:
    def __init__(self, source: str):
        self.tokens = list(tokenize(source))
        self.pos = 0
        self.includes: list[str] = []
        self.decls: dict[str, Declaration] = {}
        self.gate_defs: dict[str, GateDef] = {}
        self.statements: list[Statement] = []

    # -- token helpers ------------------------------------------------------

    @property
    def tok(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        if tok.kind != "eof":
            self.pos += 1
        return tok

    def error(self, message: str, tok: Token | None = None) -> QasmError:
        tok = tok or self.tok
        return QasmError(message, tok.line, tok.column)

    def _describe(self, tok: Token) -> str:
        return "end of input" if tok.kind == "eof" else repr(tok.text)

    def at(self, text: str) -> bool:
        return self.tok.text == text and self.tok.kind in ("symbol", "keyword")

    def expect(self, text: str) -> Token:
        if not self.at(text):
            raise self.error(f"expected {text!r}, found {self._describe(self.tok)}")
        return self.advance()

    def expect_kind(self, kind: str, what: str) -> Token:
        if self.tok.kind != kind:
            raise self.error(f"expected {what}, found {self._describe(self.tok)}")
        return self.advance()

    def expect_int(self) -> tuple[int, Token]:
        tok = self.expect_kind("int", "integer")
        return int(tok.text), tok

    # -- program --------------------------------------------------------------

    def parse_program(self) -> QasmProgram:
        self.expect("OPENQASM")
        version = self.tok
        if version.kind not in ("real", "int") or version.text != "2.0":
            raise self.error(f"unsupported OpenQASM version {version.text!r} (only 2.0)")
        self.advance()
        self.expect(";")
        while self.tok.kind != "eof":
            self.parse_top_level()
        return QasmProgram(
            version="2.0",
            includes=tuple(self.includes),
            declarations=tuple(self.decls.values()),
            gate_defs=tuple(self.gate_defs.values()),
            statements=tuple(self.statements),
        )

    def parse_top_level(self) -> None:
        tok = self.tok
        if tok.kind == "keyword":
            if tok.text == "include":
                self.advance()
                path_tok = self.expect_kind("string", "quoted file name")
                path = path_tok.text[1:-1]
                if path not in ALLOWED_INCLUDES:
                    raise self.error(f'cannot include "{path}": only "qelib1.inc" is supported', path_tok)
                self.expect(";")
                self.includes.append(path)
                return
            if tok.text in ("qreg", "creg"):
                self.parse_declaration()
                return
            if tok.text == "gate":
                self.parse_gate_def(opaque=False)
                return
            if tok.text == "opaque":
                self.parse_gate_def(opaque=True)
                return
        self.statements.append(self.parse_statement())

    def parse_declaration(self) -> None:
        kind = self.advance().text
        name_tok = self.expect_kind("id", "register name")
        self.expect("[")
        size, size_tok = self.expect_int()
        self.expect("]")
        self.expect(";")
        if name_tok.text in self.decls:
            raise self.error(f"duplicate register {name_tok.text!r}", name_tok)
        if size < 1:
            raise self.error(f"register {name_tok.text!r} must have size >= 1", size_tok)
        self.decls[name_tok.text] = Declaration(kind, name_tok.text, size)

    # -- gate definitions -----------------------------------------------------

    def parse_id_list(self, what: str) -> list[Token]:
        ids = [self.expect_kind("id", what)]
        while self.at(","):
            self.advance()
            ids.append(self.expect_kind("id", what))
        return ids

    def parse_gate_def(self, opaque: bool) -> None:
        self.advance()
        name_tok = self.expect_kind("id", "gate name")
        name = name_tok.text
        if _builtin_signature(name) is not None or name in self.gate_defs:
            raise self.error(f"gate {name!r} is already defined", name_tok)
        params: list[Token] = []
        if self.at("("):
            self.advance()
            if not self.at(")"):
                params = self.parse_id_list("parameter name")
            self.expect(")")
        qargs = self.parse_id_list("qubit argument")
        for group, what in ((params, "parameter"), (qargs, "qubit argument")):
            seen: set[str] = set()
            for t in group:
                if t.text in seen:
                    raise self.error(f"duplicate {what} {t.text!r} in gate {name!r}", t)
                seen.add(t.text)
        param_names = tuple(t.text for t in params)
        qubit_params = tuple(t.text for t in qargs)
        body: tuple[GateApp | Barrier, ...] | None = None
        if opaque:
            self.expect(";")
        else:
            self.expect("{")
            items: list[GateApp | Barrier] = []
            while not self.at("}"):
                if self.tok.kind == "eof":
                    raise self.error(f"unterminated body of gate {name!r}")
                items.append(self.parse_body_item(name, param_names, qubit_params))
            self.expect("}")
            body = tuple(items)
        self.gate_defs[name] = GateDef(name, param_names, qubit_params, body)

    def parse_body_item(
        self, gate_name: str, param_names: tuple[str, ...], qubit_params: tuple[str, ...]
    ) -> GateApp | Barrier:
        start = self.tok
        if self.at("barrier"):
            self.advance()
            args = self.parse_body_args(qubit_params)
            self.expect(";")
            return Barrier(tuple(args))
        name_tok = self.expect_kind("id", "gate application")
        name = name_tok.text
        if name == gate_name:
            raise self.error(f"recursive gate definition: {name!r} applies itself", name_tok)
        if _builtin_signature(name) is None and name not in self.gate_defs:
            raise self.error(f"unknown gate {name!r}", name_tok)
        params = self.parse_params(set(param_names))
        args = self.parse_body_args(qubit_params)
        self.expect(";")
        seen: set[str] = set()
        for a in args:
            if a.register in seen:
                raise self.error(f"repeated qubit operand {a.register!r}", start)
            seen.add(a.register)
        return GateApp(name, tuple(params), tuple(args))

    def parse_body_args(self, qubit_params: tuple[str, ...]) -> list[Operand]:
        args = []
        for t in self.parse_id_list("qubit argument"):
            if t.text not in qubit_params:
                raise self.error(f"{t.text!r} is not a qubit argument of the enclosing gate", t)
            if self.at("["):
                raise self.error("gate bodies cannot index qubit arguments")
            args.append(Operand(t.text))
        return args

    # -- statements -----------------------------------------------------------

    def parse_statement(self) -> Statement:
        tok = self.tok
        if self.at("if"):
            self.advance()
            self.expect("(")
            creg_tok = self.expect_kind("id", "classical register")
            self.expect("==")
            value, _ = self.expect_int()
            self.expect(")")
            decl = self.decls.get(creg_tok.text)
            if decl is None or decl.kind != "creg":
                raise self.error(f"{creg_tok.text!r} is not a declared classical register", creg_tok)
            if self.at("if") or self.at("barrier"):
                raise self.error("only gate, measure and reset may be conditioned")
            body = self.parse_statement()
            assert not isinstance(body, (Barrier, Conditional))
            return Conditional(creg_tok.text, value, body)
        if self.at("measure"):
            self.advance()
            q = self.parse_operand("qreg")
            self.expect("->")
            c = self.parse_operand("creg")
            self.expect(";")
            if (q.index is None) != (c.index is None):
                raise self.error("measure must map a register to a register or a bit to a bit", tok)
            return Measure(q, c)
        if self.at("reset"):
            self.advance()
            q = self.parse_operand("qreg")
            self.expect(";")
            return Reset(q)
        if self.at("barrier"):
            self.advance()
            args = self.parse_operand_list()
            self.expect(";")
            return Barrier(tuple(args))
        name_tok = self.expect_kind("id", "statement")
        name = name_tok.text
        gd = self.gate_defs.get(name)
        if _builtin_signature(name) is None and gd is None:
            raise self.error(f"unknown gate {name!r}", name_tok)
        params = self.parse_params(set())
        args = self.parse_operand_list()
        self.expect(";")
        self.check_distinct(args, tok)
        if gd is not None and gd.opaque:
            return OpaqueApp(name, tuple(params), tuple(args))
        return GateApp(name, tuple(params), tuple(args))

    def parse_operand_list(self) -> list[Operand]:
        args = [self.parse_operand("qreg")]
        while self.at(","):
            self.advance()
            args.append(self.parse_operand("qreg"))
        return args

    def parse_operand(self, kind: str) -> Operand:
        name_tok = self.expect_kind("id", "register operand")
        decl = self.decls.get(name_tok.text)
        if decl is None:
            raise self.error(f"undeclared register {name_tok.text!r}", name_tok)
        if decl.kind != kind:
            want = "quantum" if kind == "qreg" else "classical"
            raise self.error(f"{name_tok.text!r} is not a {want} register", name_tok)
        if not self.at("["):
            return Operand(name_tok.text)
        self.advance()
        index, index_tok = self.expect_int()
        self.expect("]")
        if index >= decl.size:
            raise self.error(
                f"index {index} out of range for register {decl.name!r} of size {decl.size}", index_tok
            )
        return Operand(name_tok.text, index)

    def check_distinct(self, args: list[Operand], at: Token) -> None:
        """Reject operand lists that would apply a gate twice to one qubit."""
        for i, a in enumerate(args):
            for b in args[:i]:
                if a.register != b.register:
                    continue
                if a.index is None or b.index is None or a.index == b.index:
                    raise self.error("repeated qubit operand in gate application", at)

    # -- expressions ----------------------------------------------------------

    def parse_params(self, names: set[str]) -> list[ParamExpr]:
        if not self.at("("):
            return []
        self.advance()
        params: list[ParamExpr] = []
        if not self.at(")"):
            params.append(self.parse_expr(names))
            while self.at(","):
                self.advance()
                params.append(self.parse_expr(names))
        self.expect(")")
        return params

    def parse_expr(self, names: set[str] | None) -> ParamExpr:
        left = self.parse_term(names)
        while self.at("+") or self.at("-"):
            op = self.advance().text
            left = BinOp(op, left, self.parse_term(names))
        return left

    def parse_term(self, names: set[str] | None) -> ParamExpr:
        left = self.parse_unary(names)
        while self.at("*") or self.at("/"):
            op = self.advance().text
            left = BinOp(op, left, self.parse_unary(names))
        return left

    def parse_unary(self, names: set[str] | None) -> ParamExpr:
        if self.at("-"):
            self.advance()
            return Neg(self.parse_unary(names))
        if self.at("+"):
            self.advance()
            return self.parse_unary(names)
        return self.parse_power(names)

    def parse_power(self, names: set[str] | None) -> ParamExpr:
        base = self.parse_atom(names)
        if self.at("^"):
            self.advance()
            return BinOp("^", base, self.parse_unary(names))
        return base

    def parse_atom(self, names: set[str] | None) -> ParamExpr:
        tok = self.tok
        if tok.kind in ("real", "int"):
            self.advance()
            value = float(tok.text)
            if not math.isfinite(value):
                raise self.error(f"numeric literal {tok.text} is out of range", tok)
            return Num(value)
        if self.at("pi"):
            self.advance()
            return Pi()
        if self.at("("):
            self.advance()
            inner = self.parse_expr(names)
            self.expect(")")
            return inner
        if tok.kind == "id":
            self.advance()
            if tok.text in FUNCTIONS:
                self.expect("(")
                arg = self.parse_expr(names)
                self.expect(")")
                return Call(tok.text, arg)
            if names is not None and tok.text not in names:
                raise self.error(f"unbound parameter {tok.text!r}", tok)
            return Name(tok.text)
        raise self.error(f"expected expression, found {self._describe(tok)}")


def parse_program(source: str) -> QasmProgram:
    """Parse OpenQASM 2.0 text into a :class:`QasmProgram`.

    Raises :class:`~qact.errors.QasmError` carrying a 1-based line and
    column for lexical, syntactic and semantic problems (duplicate or
    undeclared registers, out-of-range indices, unknown or recursive gates,
    repeated qubit operands).
    """
    return _Parser(source).parse_program()


def parse_expression(text: str) -> ParamExpr:
    """Parse a standalone parameter expression such as ``"pi/2"``.

    Free names are allowed; they are checked when the expression is evaluated.
    """
    p = _Parser(text)
    expr = p.parse_expr(None)
    if p.tok.kind != "eof":
        raise p.error(f"unexpected {p._describe(p.tok)} after expression")
    return expr
