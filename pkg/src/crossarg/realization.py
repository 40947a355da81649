"""Hypothesis field assignment and template-based English realization.

A hypothesis is a simple declarative sentence built around a verb with up
to four argument phrases, one per syntactic position:

    Active  =>  SUBJ AUX VERB DOBJ IOBJ ADJ
    Passive =>  DOBJ AUX VERB_participle IOBJ ADJ

The auxiliary and main verb come from a fixed matrix over tense, modal,
negation, and voice (``sg``/``pl`` marks subject agreement, ``part`` the
past participle):

    voice   tense    modal  auxiliary            main verb
    ------- -------- ------ -------------------- ------------
    active  present  none   (does/do not)        base / 3sg
    active  past     none   (did not)            base / past
    active  future   none   will (not)           base
    active  present  M      M (not)              base
    active  future   M      M (not)              base
    active  past     M      M (not) have         part
    passive present  none   is/are (not)         part
    passive past     none   was/were (not)       part
    passive future   none   will (not) be        part
    passive present  M      M (not) be           part
    passive future   M      M (not) be           part
    passive past     M      M (not) have been    part

Negation always places "not" right after the first auxiliary word.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, replace
from typing import Protocol, Sequence

from . import inflection
from .questions import (
    DEFAULT_ATTRIBUTES,
    GrammaticalAttributes,
    QasrlQuestion,
    SyntacticPosition,
    grammatical_attributes,
)
from .documents import Span

log = logging.getLogger(__name__)

ACTIVE = "active"
PASSIVE = "passive"

SOMEONE = "someone"
SOMETHING = "something"

#: Prepositions the masked-token reranker may choose from.
PREPOSITION_CHOICES = (
    "on", "at", "for", "to", "from", "about", "as", "against", "in",
    "with", "off", "over", "into", "after", "while", "before", "by",
)

#: Number of top-ranked vocabulary entries searched for a preposition.
PREPOSITION_TOP_K = 10

MASK_TOKEN = "[MASK]"


@dataclass(frozen=True)
class Phrase:
    """An argument phrase with an optional head word for agreement."""

    text: str
    head: str | None = None
    placeholder: bool = False

    @classmethod
    def of(cls, value: "Phrase | str | None") -> "Phrase | None":
        if value is None or isinstance(value, Phrase):
            return value
        return cls(text=value)

    @property
    def head_word(self) -> str:
        if self.head:
            return self.head
        return self.text.split()[-1]


PLACEHOLDER_SUBJECT = Phrase(SOMEONE, placeholder=True)
PLACEHOLDER_OBJECT = Phrase(SOMETHING, placeholder=True)


@dataclass(frozen=True)
class PrepPhrase:
    """A phrase with its connecting preposition, empty when none applies."""

    prep: str | None
    phrase: Phrase


@dataclass(frozen=True)
class LocalArgument:
    """An in-sentence argument with its question label and position."""

    span: Span
    question: QasrlQuestion
    position: SyntacticPosition
    text: str
    head_text: str
    verification_score: float = 1.0


@dataclass(frozen=True)
class HypothesisFields:
    """Slot assignment for one hypothesis sentence."""

    verb_lemma: str
    subj: Phrase | None = None
    dobj: Phrase | None = None
    iobj: PrepPhrase | None = None
    adj: PrepPhrase | None = None
    attributes: GrammaticalAttributes = DEFAULT_ATTRIBUTES
    voice: str = ACTIVE

    def __post_init__(self) -> None:
        if self.voice not in (ACTIVE, PASSIVE):
            raise ValueError(f"unknown voice {self.voice!r}")
        if self.voice == ACTIVE and self.subj is None:
            raise ValueError("active voice requires a subject")
        if self.voice == PASSIVE and (self.dobj is None or self.subj is not None):
            raise ValueError("passive voice requires a direct object and no subject")

    def concrete_phrases(self) -> dict[SyntacticPosition, str]:
        out: dict[SyntacticPosition, str] = {}
        if self.subj is not None and not self.subj.placeholder:
            out[SyntacticPosition.SUBJ] = self.subj.text
        if self.dobj is not None and not self.dobj.placeholder:
            out[SyntacticPosition.DOBJ] = self.dobj.text
        if self.iobj is not None and not self.iobj.phrase.placeholder:
            out[SyntacticPosition.IOBJ] = self.iobj.phrase.text
        if self.adj is not None and not self.adj.phrase.placeholder:
            out[SyntacticPosition.ADJ] = self.adj.phrase.text
        return out


@dataclass(frozen=True)
class Hypothesis:
    """A realized hypothesis, tagged with the candidate it embeds, if any."""

    text: str
    fields: HypothesisFields
    candidate_position: SyntacticPosition | None = None
    candidate_text: str | None = None


def resolve_fields(
    verb_lemma: str,
    subj: Phrase | None,
    dobj: Phrase | None,
    iobj: PrepPhrase | None,
    adj: PrepPhrase | None,
    attributes: GrammaticalAttributes,
) -> HypothesisFields:
    """Pick voice and insert placeholders for a raw slot assignment.

    A concrete subject selects the active voice. With no subject, a
    concrete direct object selects the passive. With neither, the sentence
    is made active with a placeholder subject.
    """
    if subj is not None and not subj.placeholder:
        voice = ACTIVE
    elif dobj is not None and not dobj.placeholder:
        voice = PASSIVE
        subj = None
    else:
        voice = ACTIVE
        subj = PLACEHOLDER_SUBJECT
    return HypothesisFields(
        verb_lemma=verb_lemma,
        subj=subj,
        dobj=dobj,
        iobj=iobj,
        adj=adj,
        attributes=attributes,
        voice=voice,
    )


def assign_fields(
    predicate_lemma: str, locals_: Sequence[LocalArgument]
) -> HypothesisFields:
    """Populate hypothesis fields from verified local arguments.

    Each position receives its best-scoring local argument; grammatical
    attributes come from the question of the first local argument in
    parser order. With no local arguments at all, the sentence defaults to
    a placeholder subject and past tense.
    """
    best: dict[SyntacticPosition, LocalArgument] = {}
    for arg in locals_:
        cur = best.get(arg.position)
        if cur is None or arg.verification_score > cur.verification_score:
            best[arg.position] = arg

    if locals_:
        attributes = grammatical_attributes(locals_[0].question)
    else:
        attributes = DEFAULT_ATTRIBUTES

    def phrase(pos: SyntacticPosition) -> Phrase | None:
        arg = best.get(pos)
        if arg is None:
            return None
        return Phrase(arg.text, head=arg.head_text)

    def prep_phrase(pos: SyntacticPosition) -> PrepPhrase | None:
        arg = best.get(pos)
        if arg is None:
            return None
        prep = arg.question.prep or None
        return PrepPhrase(prep, Phrase(arg.text, head=arg.head_text))

    return resolve_fields(
        verb_lemma=predicate_lemma,
        subj=phrase(SyntacticPosition.SUBJ),
        dobj=phrase(SyntacticPosition.DOBJ),
        iobj=prep_phrase(SyntacticPosition.IOBJ),
        adj=prep_phrase(SyntacticPosition.ADJ),
        attributes=attributes,
    )


# --- realization -----------------------------------------------------------

_DO = {inflection.FIRST_SINGULAR: "do", inflection.SINGULAR: "does", inflection.PLURAL: "do"}
_BE_PRESENT = {inflection.FIRST_SINGULAR: "am", inflection.SINGULAR: "is", inflection.PLURAL: "are"}
_BE_PAST = {inflection.FIRST_SINGULAR: "was", inflection.SINGULAR: "was", inflection.PLURAL: "were"}


def _active_verb_group(lemma: str, attrs: GrammaticalAttributes, agree: str) -> list[str]:
    aux: list[str] = []
    if attrs.modal is not None:
        aux.append(attrs.modal)
        if attrs.negation:
            aux.append("not")
        if attrs.tense == "past":
            aux.append("have")
            verb = inflection.past_participle(lemma)
        else:
            verb = lemma
    elif attrs.tense == "future":
        aux.append("will")
        if attrs.negation:
            aux.append("not")
        verb = lemma
    elif attrs.tense == "past":
        if attrs.negation:
            aux.extend(["did", "not"])
            verb = lemma
        else:
            verb = inflection.past(lemma)
    else:  # present
        if attrs.negation:
            aux.extend([_DO[agree], "not"])
            verb = lemma
        elif agree == inflection.SINGULAR:
            verb = inflection.present_3sg(lemma)
        else:
            verb = lemma
    return aux + [verb]


def _passive_verb_group(lemma: str, attrs: GrammaticalAttributes, agree: str) -> list[str]:
    participle = inflection.past_participle(lemma)
    aux: list[str] = []
    if attrs.modal is not None:
        aux.append(attrs.modal)
        if attrs.negation:
            aux.append("not")
        if attrs.tense == "past":
            aux.extend(["have", "been"])
        else:
            aux.append("be")
    elif attrs.tense == "future":
        aux.append("will")
        if attrs.negation:
            aux.append("not")
        aux.append("be")
    else:
        be = _BE_PAST[agree] if attrs.tense == "past" else _BE_PRESENT[agree]
        aux.append(be)
        if attrs.negation:
            aux.append("not")
    return aux + [participle]


def realize(fields: HypothesisFields) -> str:
    """Render the hypothesis fields as a single declarative sentence.

    Deterministic: the same fields always produce the same sentence.
    Verbs missing from the irregular table inflect by the regular rules.
    """
    lemma = fields.verb_lemma.strip().lower()
    if not lemma.isalpha():
        log.warning("verb lemma %r is not a plain word; inflecting as-is", fields.verb_lemma)

    parts: list[str] = []
    if fields.voice == ACTIVE:
        subject = fields.subj
        assert subject is not None
        agree = inflection.agreement_class(subject.head_word)
        parts.append(subject.text)
        parts.extend(_active_verb_group(lemma, fields.attributes, agree))
        if fields.dobj is not None:
            parts.append(fields.dobj.text)
    else:
        subject = fields.dobj
        assert subject is not None
        agree = inflection.agreement_class(subject.head_word)
        parts.append(subject.text)
        parts.extend(_passive_verb_group(lemma, fields.attributes, agree))

    for slot in (fields.iobj, fields.adj):
        if slot is None:
            continue
        if slot.prep:
            parts.append(slot.prep)
        parts.append(slot.phrase.text)

    sentence = " ".join(p for p in parts if p)
    return sentence[0].upper() + sentence[1:] + "."


# --- candidate insertion ---------------------------------------------------


def candidate_hypotheses(
    fields: HypothesisFields,
    candidate_text: str,
    candidate_head: str | None = None,
    iobj_prep: str | None = None,
) -> list[Hypothesis]:
    """Place a candidate phrase in the subject, direct object, and indirect
    object positions, yielding exactly three hypotheses.

    Each variant may override a local argument already occupying the
    position; voice is re-resolved per variant. The indirect object
    variant uses ``iobj_prep`` (from the preposition reranker or from a
    syntactic attachment) and omits the preposition when none was found.
    """
    cand = Phrase(candidate_text, head=candidate_head)
    out: list[Hypothesis] = []
    for position in (SyntacticPosition.SUBJ, SyntacticPosition.DOBJ, SyntacticPosition.IOBJ):
        variant = fields_with_candidate(fields, position, cand, iobj_prep)
        out.append(
            Hypothesis(
                text=realize(variant),
                fields=variant,
                candidate_position=position,
                candidate_text=candidate_text,
            )
        )
    return out


def fields_with_candidate(
    fields: HypothesisFields,
    position: SyntacticPosition,
    candidate: Phrase,
    iobj_prep: str | None = None,
) -> HypothesisFields:
    subj = None if fields.subj is None or fields.subj.placeholder else fields.subj
    dobj = None if fields.dobj is None or fields.dobj.placeholder else fields.dobj
    iobj, adj = fields.iobj, fields.adj
    if position is SyntacticPosition.SUBJ:
        subj = candidate
    elif position is SyntacticPosition.DOBJ:
        dobj = candidate
    elif position is SyntacticPosition.IOBJ:
        iobj = PrepPhrase(iobj_prep, candidate)
    else:
        raise ValueError(f"candidates are never placed in {position}")
    return resolve_fields(fields.verb_lemma, subj, dobj, iobj, adj, fields.attributes)


def transitivity_expansion(fields: HypothesisFields) -> HypothesisFields | None:
    """Add a placeholder direct object to force the transitive reading.

    Only applies to active sentences whose direct object slot is empty;
    the expanded variant is scored alongside the original.
    """
    if fields.voice != ACTIVE or fields.dobj is not None:
        return None
    return replace(fields, dobj=PLACEHOLDER_OBJECT)


# --- preposition selection -------------------------------------------------


class FillMaskBackend(Protocol):
    """Masked-token ranking contract.

    Given a text containing exactly one mask slot, returns at least the
    top ``k`` vocabulary entries as (token, probability) pairs sorted by
    descending probability.
    """

    def top_tokens(self, text: str, k: int) -> list[tuple[str, float]]: ...


def select_preposition(
    doc_text: str,
    hypothesis_with_gap: str,
    backend: FillMaskBackend,
    choices: Sequence[str] = PREPOSITION_CHOICES,
    top_k: int = PREPOSITION_TOP_K,
) -> str | None:
    """Choose a preposition for a gap in the hypothesis, if the ranker
    supports one.

    The backend sees the document concatenated with the gapped hypothesis.
    The highest-probability member of ``choices`` is returned when it
    ranks within the top ``top_k`` vocabulary entries; otherwise the gap
    stays empty.
    """
    if hypothesis_with_gap.count(MASK_TOKEN) != 1:
        raise ValueError("hypothesis must contain exactly one mask slot")
    ranked = backend.top_tokens(f"{doc_text} {hypothesis_with_gap}", top_k)
    for token, _prob in ranked[:top_k]:
        if token in choices:
            return token
    return None
