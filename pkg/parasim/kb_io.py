"""
Knowledge-Base Files
====================
Parses and writes the knowledge-base text format.

Format (UTF-8, '#' starts a comment):

    @version 1
    K1: fievre, toux, !maux_de_tete
    K2: fievre, ¬toux, maux_de_tete
    K3: parent(alice, bob), !parent(bob, alice)
    K4:

One entity per line: an id, a colon, then comma-separated literals. A
literal is an optional '!' or '¬' (negation), an atom name and optional
parenthesized ground arguments. Whitespace around separators is ignored.

Usage:
    kb = load_kb('data/sample/medical.kb')
    text = serialize_kb(kb)
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from pathlib import Path

from parasim.errors import DuplicateEntityError, KbFileError, KbSyntaxError
from parasim.kb_model import NAME_PATTERN, NEGATION_MARKERS, Atom, Entity, KnowledgeBase, Literal, Polarity

logger = logging.getLogger(__name__)


FORMAT_VERSION = '1'

ID_PATTERN = re.compile(rf"\s*({NAME_PATTERN.pattern})\s*:")
VERSION_PATTERN = re.compile(r"\s*@version\s+(\S+)\s*$")


@dataclass(frozen=True)
class KbDocument:
    version: str
    entities: tuple[tuple[str, tuple[str, ...]], ...]

    def to_kb(self) -> KnowledgeBase:
        return KnowledgeBase(tuple(
            Entity(entity_id, [parse_literal(text) for text in literals])
            for entity_id, literals in self.entities
        ))


# ============================================================================
# SCANNING
# ============================================================================

def _skip_ws(line, pos):
    while pos < len(line) and line[pos].isspace():
        pos += 1
    return pos


def _name(line, pos, lineno, what):
    match = NAME_PATTERN.match(line, pos)
    if not match:
        found = repr(line[pos]) if pos < len(line) else 'end of line'
        raise KbSyntaxError(f"expected {what}, found {found}", lineno, pos + 1)
    return match.group(0), match.end()


def _literal(line, pos, lineno):
    """Parse one literal starting at pos; return (Literal, next position)."""
    polarity = Polarity.POSITIVE
    if pos < len(line) and line[pos] in NEGATION_MARKERS:
        polarity = Polarity.NEGATIVE
        pos = _skip_ws(line, pos + 1)

    name, pos = _name(line, pos, lineno, 'atom name')
    args = []

    after = _skip_ws(line, pos)
    if after < len(line) and line[after] == '(':
        pos = _skip_ws(line, after + 1)
        while True:
            term, pos = _name(line, pos, lineno, 'ground term')
            args.append(term)
            pos = _skip_ws(line, pos)
            if pos < len(line) and line[pos] == ',':
                pos = _skip_ws(line, pos + 1)
                continue
            if pos < len(line) and line[pos] == ')':
                pos += 1
                break
            raise KbSyntaxError("expected ',' or ')' in argument list", lineno, pos + 1)

    return Literal(Atom(name, tuple(args)), polarity), pos


def _literal_list(line, pos, lineno):
    literals = []
    pos = _skip_ws(line, pos)
    if pos == len(line):
        return literals

    while True:
        literal, pos = _literal(line, pos, lineno)
        literals.append(literal)
        pos = _skip_ws(line, pos)
        if pos == len(line):
            return literals
        if line[pos] != ',':
            raise KbSyntaxError(f"expected ',' between literals, found {line[pos]!r}", lineno, pos + 1)
        pos = _skip_ws(line, pos + 1)
        if pos == len(line):
            raise KbSyntaxError("expected literal after ','", lineno, pos + 1)


def parse_literal(text: str) -> Literal:
    """Parse a single literal string such as '!parent(bob, alice)'."""
    line = text.strip()
    literal, pos = _literal(line, 0, 1)
    if _skip_ws(line, pos) != len(line):
        raise KbSyntaxError(f"unexpected text after literal: {line[pos:]!r}", 1, pos + 1)
    return literal


# ============================================================================
# PARSING
# ============================================================================

def _parse(text: str) -> tuple[str, KnowledgeBase]:
    version = FORMAT_VERSION
    seen_entity = False
    seen_version = False
    entities = []
    ids = set()

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split('#', 1)[0].rstrip()
        if not line.strip():
            continue

        if line.lstrip().startswith('@'):
            match = VERSION_PATTERN.match(line)
            if not match:
                raise KbSyntaxError("unknown directive (only '@version <v>' is supported)",
                                    lineno, line.index('@') + 1)
            if seen_version or seen_entity:
                raise KbSyntaxError("'@version' must appear once, before any entity",
                                    lineno, line.index('@') + 1)
            version = match.group(1)
            seen_version = True
            continue

        match = ID_PATTERN.match(line)
        if not match:
            raise KbSyntaxError("expected '<entity id>:'", lineno, _skip_ws(line, 0) + 1)

        entity_id = match.group(1)
        if entity_id in ids:
            raise DuplicateEntityError(entity_id, lineno)
        ids.add(entity_id)

        literals = _literal_list(line, match.end(), lineno)
        entities.append(Entity(entity_id, literals))
        seen_entity = True

    return version, KnowledgeBase(tuple(entities))


def parse_kb(text: str) -> KnowledgeBase:
    """Knowledge base in document order; duplicate literals collapse, duplicate ids raise."""
    _, kb = _parse(text)
    return kb


def parse_document(text: str) -> KbDocument:
    version, kb = _parse(text)
    return KbDocument(
        version=version,
        entities=tuple((entity.id, tuple(str(lit) for lit in entity)) for entity in kb),
    )


def load_kb(path) -> KnowledgeBase:
    path = Path(path)
    try:
        text = path.read_text(encoding='utf-8')
    except (OSError, UnicodeDecodeError) as e:
        raise KbFileError(path, e) from e

    kb = parse_kb(text)
    logger.info("Loaded %d entities from %s", len(kb), path)
    return kb


# ============================================================================
# SERIALIZATION
# ============================================================================

def serialize_kb(kb: KnowledgeBase, version: str = FORMAT_VERSION) -> str:
    """Text form with canonical literal order; parse_kb inverts it."""
    lines = [f"@version {version}"]
    for entity in kb:
        body = ', '.join(str(lit) for lit in entity)
        lines.append(f"{entity.id}: {body}" if body else f"{entity.id}:")
    return '\n'.join(lines) + '\n'
