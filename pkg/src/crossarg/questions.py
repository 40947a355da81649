"""QA-SRL question labels: syntactic position mapping and event attributes.

A question label is a 7-slot structure (Wh-word, auxiliary, subject
placeholder, verb, object placeholder, preposition, second object
placeholder). The slot structure, not free text, is the canonical form;
``parse_question`` is a thin adapter for backends that emit flat strings.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum

from . import inflection

log = logging.getLogger(__name__)

WH_WORDS = frozenset({"who", "what", "when", "where", "why", "how", "how much"})
ADJUNCT_WH = frozenset({"when", "where", "why", "how", "how much"})
PLACEHOLDERS = frozenset({"none", "someone", "something"})
MODAL_VERBS = ("may", "should", "would", "can", "might")

TENSES = ("past", "present", "future")


class UnmappedQuestionError(ValueError):
    """Question shape has no syntactic position; callers demote the argument."""


class QuestionParseError(ValueError):
    """Flat question string does not fit the 7-slot grammar."""


class SyntacticPosition(str, Enum):
    SUBJ = "SUBJ"
    DOBJ = "DOBJ"
    IOBJ = "IOBJ"
    ADJ = "ADJ"

    def __str__(self) -> str:  # pragma: no cover - repr convenience
        return self.value


@dataclass(frozen=True)
class GrammaticalAttributes:
    """Tense, negation, and modality of the described event."""

    tense: str = "present"
    negation: bool = False
    modal: str | None = None

    def __post_init__(self) -> None:
        if self.tense not in TENSES:
            raise ValueError(f"unknown tense {self.tense!r}")
        if self.modal is not None and self.modal not in MODAL_VERBS:
            raise ValueError(f"unknown modal {self.modal!r}")


#: Attributes assumed when a predicate has no usable local argument.
DEFAULT_ATTRIBUTES = GrammaticalAttributes(tense="past")


@dataclass(frozen=True)
class QasrlQuestion:
    """Structured QA-SRL question label."""

    wh: str
    aux: str = ""
    subj_placeholder: str = "none"
    verb_form: str = ""
    obj_placeholder: str = "none"
    prep: str = ""
    obj2_placeholder: str = "none"
    is_passive: bool = False

    def __post_init__(self) -> None:
        if self.wh not in WH_WORDS:
            raise ValueError(f"unknown Wh-word {self.wh!r}")
        if not self.verb_form:
            raise ValueError("question has no verb")
        for slot in (self.subj_placeholder, self.obj_placeholder, self.obj2_placeholder):
            if slot not in PLACEHOLDERS:
                raise ValueError(f"bad placeholder {slot!r}")

    def text(self) -> str:
        parts = [self.wh, self.aux]
        if self.subj_placeholder != "none":
            parts.append(self.subj_placeholder)
        parts.append(self.verb_form)
        if self.obj_placeholder != "none":
            parts.append(self.obj_placeholder)
        parts.append(self.prep)
        if self.obj2_placeholder != "none":
            parts.append(self.obj2_placeholder)
        words = " ".join(p for p in parts if p).split()
        return " ".join(words).capitalize() + "?"

    def to_json(self) -> dict:
        return {
            "wh": self.wh,
            "aux": self.aux,
            "subj_placeholder": self.subj_placeholder,
            "verb_form": self.verb_form,
            "obj_placeholder": self.obj_placeholder,
            "prep": self.prep,
            "obj2_placeholder": self.obj2_placeholder,
            "is_passive": self.is_passive,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "QasrlQuestion":
        return cls(
            wh=obj["wh"],
            aux=obj.get("aux", ""),
            subj_placeholder=obj.get("subj_placeholder", "none"),
            verb_form=obj["verb_form"],
            obj_placeholder=obj.get("obj_placeholder", "none"),
            prep=obj.get("prep", ""),
            obj2_placeholder=obj.get("obj2_placeholder", "none"),
            is_passive=bool(obj.get("is_passive", False)),
        )


def syntactic_position_of(q: QasrlQuestion) -> SyntacticPosition:
    """Map a question to the syntactic position its answer occupies.

    Non who/what questions are adjuncts. For who/what, a preposition slot
    marks an indirect object; otherwise the Wh-gap is the subject when the
    subject slot is empty in an active question, and the (deep) direct
    object when the subject slot is filled or the question is passive.

    Raises UnmappedQuestionError for the residue (a passive question with
    a filled subject slot and no preposition), so no position is ever
    silently defaulted.
    """
    if q.wh in ADJUNCT_WH:
        if q.wh == "how much":
            log.debug("mapping 'how much' question to ADJ: %s", q.text())
        return SyntacticPosition.ADJ
    if q.prep:
        return SyntacticPosition.IOBJ
    if q.is_passive:
        if q.subj_placeholder == "none":
            return SyntacticPosition.DOBJ
        raise UnmappedQuestionError(
            f"passive question with filled subject slot: {q.text()!r}"
        )
    if q.subj_placeholder == "none":
        return SyntacticPosition.SUBJ
    return SyntacticPosition.DOBJ


def _question_tokens(q: QasrlQuestion) -> list[str]:
    tokens: list[str] = []
    for chunk in (q.aux, q.verb_form):
        for tok in chunk.lower().split():
            if tok.endswith("n't") and len(tok) > 3:
                tokens.extend([tok[:-3], "n't"])
            else:
                tokens.append(tok)
    return tokens


def grammatical_attributes(q: QasrlQuestion) -> GrammaticalAttributes:
    """Extract tense, negation, and modality from a question label.

    Only the auxiliary and verb slots matter; the Wh-word and the
    placeholders never influence the result.
    """
    tokens = _question_tokens(q)
    negation = "not" in tokens or "n't" in tokens

    modal = None
    for tok in tokens:
        if tok in MODAL_VERBS:
            modal = tok
            break

    aux_tokens = [t for t in q.aux.lower().split()]
    verb_tokens = q.verb_form.lower().split()
    if "will" in aux_tokens or "wo" in (t[:-3] for t in aux_tokens if t.endswith("n't")):
        tense = "future"
    elif {"did", "was", "were", "had"} & set(tokens):
        tense = "past"
    elif verb_tokens and verb_tokens[0] in ("have", "has", "had") and len(verb_tokens) > 1:
        tense = "past"
    elif verb_tokens and inflection.looks_past_inflected(verb_tokens[-1]):
        tense = "past"
    else:
        tense = "present"
    return GrammaticalAttributes(tense=tense, negation=negation, modal=modal)


# --- flat-string parsing ---------------------------------------------------

_AUX_WORDS = frozenset(
    """
    is are was were am do does did has have had will would can could shall
    should may might must not
    """.split()
)
_BE_FORMS = frozenset({"is", "are", "was", "were", "am", "be", "been", "being"})
_PREPOSITIONS = frozenset(
    """
    on at for to from about as against in with off over into after while
    before by of during under between through upon onto toward towards
    without within across along behind beside near
    """.split()
)


def parse_question(text: str) -> QasrlQuestion:
    """Parse a flat question string into the slot structure.

    Supports the restricted QA-SRL grammar only; anything else raises
    QuestionParseError.
    """
    words = text.strip().rstrip("?").split()
    words = [w.lower() for w in words if w]
    if len(words) >= 2 and " ".join(words[:2]) == "how much":
        wh, rest = "how much", words[2:]
    elif words and words[0] in WH_WORDS:
        wh, rest = words[0], words[1:]
    else:
        raise QuestionParseError(f"no Wh-word in {text!r}")

    aux_parts: list[str] = []
    i = 0
    while i < len(rest) and _is_aux_token(rest[i]) and not _starts_verb_phrase(rest, i):
        aux_parts.append(rest[i])
        i += 1

    subj_placeholder = "none"
    if i < len(rest) and rest[i] in ("someone", "something"):
        subj_placeholder = rest[i]
        i += 1

    verb_parts: list[str] = []
    while i < len(rest) and rest[i] not in ("someone", "something") and rest[i] not in _PREPOSITIONS:
        verb_parts.append(rest[i])
        i += 1
    if not verb_parts:
        raise QuestionParseError(f"no verb found in {text!r}")

    obj_placeholder = "none"
    if i < len(rest) and rest[i] in ("someone", "something"):
        obj_placeholder = rest[i]
        i += 1

    prep = ""
    if i < len(rest) and rest[i] in _PREPOSITIONS:
        prep = rest[i]
        i += 1

    obj2_placeholder = "none"
    if i < len(rest) and rest[i] in ("someone", "something"):
        obj2_placeholder = rest[i]
        i += 1

    if i != len(rest):
        raise QuestionParseError(f"trailing words {rest[i:]!r} in {text!r}")

    verb_form = " ".join(verb_parts)
    is_passive = _detect_passive(aux_parts, verb_parts)
    return QasrlQuestion(
        wh=wh,
        aux=" ".join(aux_parts),
        subj_placeholder=subj_placeholder,
        verb_form=verb_form,
        obj_placeholder=obj_placeholder,
        prep=prep,
        obj2_placeholder=obj2_placeholder,
        is_passive=is_passive,
    )


_CONTRACTIBLE_AUX = frozenset(
    "is are was were do does did has have had wo would ca could should might must".split()
)


def _is_aux_token(tok: str) -> bool:
    if tok.endswith("n't") and len(tok) > 3:
        return tok[:-3] in _CONTRACTIBLE_AUX
    return tok in _AUX_WORDS


def _starts_verb_phrase(rest: list[str], i: int) -> bool:
    # "have"/"had"/"be" open the verb slot when what follows is a participle,
    # as in "might have left"; as a leading auxiliary ("Has someone left?")
    # they stay in the aux slot.
    tok = rest[i]
    if tok in ("have", "has", "had", "be", "been") and i + 1 < len(rest):
        return inflection.looks_past_inflected(rest[i + 1])
    return False


def _detect_passive(aux_parts: list[str], verb_parts: list[str]) -> bool:
    main = verb_parts[-1]
    if not inflection.looks_past_inflected(main):
        return False
    if any(t in _BE_FORMS for t in verb_parts[:-1]):
        return True
    return bool(aux_parts) and aux_parts[0] in _BE_FORMS and len(verb_parts) == 1
