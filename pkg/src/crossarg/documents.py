"""Token-indexed documents, spans with syntactic heads, and entity clusters.

All token indices are global over the document: sentence boundaries are
derived from the sentence lengths and never stored on spans. Types are
immutable after construction and safe to share across workers.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from typing import Iterable, Iterator

log = logging.getLogger(__name__)


class MalformedInputError(ValueError):
    """Raised when an input document or span violates the format contract."""


@dataclass(frozen=True)
class Span:
    """Half-open token range ``[start, end)`` with a head token index."""

    start: int
    end: int
    head: int

    def __post_init__(self) -> None:
        if self.start >= self.end:
            raise MalformedInputError(f"empty span [{self.start}, {self.end})")
        if not (self.start <= self.head < self.end):
            raise MalformedInputError(
                f"head {self.head} outside span [{self.start}, {self.end})"
            )

    @classmethod
    def make(cls, start: int, end: int, head: int | None = None) -> "Span":
        """Build a span, defaulting a missing head to the last token.

        Head indices normally come from an upstream dependency analysis;
        when absent we fall back to the final token and warn once per call.
        """
        if head is None:
            head = end - 1
            log.warning("span [%d, %d) has no head index; defaulting to last token", start, end)
        return cls(start, end, head)

    def __len__(self) -> int:
        return self.end - self.start

    def overlaps(self, other: "Span") -> bool:
        return self.start < other.end and other.start < self.end

    def key(self) -> tuple[int, int]:
        return (self.start, self.end)


def iou(a: Span, b: Span) -> float:
    """Tokenwise intersection-over-union of two spans."""
    inter = max(0, min(a.end, b.end) - max(a.start, b.start))
    union = len(a) + len(b) - inter
    return inter / union


def span_match_score(a: Span, m: Span) -> float:
    """Max of the head-equality indicator and the tokenwise IOU.

    Equal heads force a full match regardless of how little the spans
    overlap; otherwise the score degrades to plain IOU.
    """
    if a.head == m.head:
        return 1.0
    return iou(a, m)


@dataclass(frozen=True)
class Mention:
    span: Span
    cc_id: str | int


@dataclass(frozen=True)
class EntityCluster:
    """A set of co-referring mentions sharing one entity identifier."""

    cc_id: str | int
    mentions: tuple[Mention, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "mentions", tuple(self.mentions))
        seen: set[tuple[int, int]] = set()
        for m in self.mentions:
            if m.cc_id != self.cc_id:
                raise MalformedInputError(
                    f"mention cc_id {m.cc_id!r} differs from cluster {self.cc_id!r}"
                )
            if m.span.key() in seen:
                raise MalformedInputError(
                    f"duplicate mention {m.span.key()} in cluster {self.cc_id!r}"
                )
            seen.add(m.span.key())


@dataclass(frozen=True)
class Sentence:
    index: int
    tokens: tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "tokens", tuple(self.tokens))
        if not self.tokens:
            raise MalformedInputError(f"sentence {self.index} has no tokens")

    def __len__(self) -> int:
        return len(self.tokens)


@dataclass(frozen=True)
class Document:
    """A tokenized document with its coreference clusters.

    ``offsets[i]`` is the global index of sentence ``i``'s first token, so
    ``offsets`` acts as the prefix-sum table behind every local/global
    index conversion.
    """

    doc_id: str
    sentences: tuple[Sentence, ...]
    clusters: tuple[EntityCluster, ...] = ()
    offsets: tuple[int, ...] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "sentences", tuple(self.sentences))
        object.__setattr__(self, "clusters", tuple(self.clusters))
        if not self.sentences:
            raise MalformedInputError(f"document {self.doc_id!r} has no sentences")
        offsets = []
        total = 0
        for i, sent in enumerate(self.sentences):
            if sent.index != i:
                raise MalformedInputError(
                    f"sentence index {sent.index} at position {i} in {self.doc_id!r}"
                )
            offsets.append(total)
            total += len(sent)
        object.__setattr__(self, "offsets", tuple(offsets))
        for cluster in self.clusters:
            for m in cluster.mentions:
                if m.span.end > total:
                    raise MalformedInputError(
                        f"cluster {cluster.cc_id!r} mention {m.span.key()} exceeds "
                        f"document length {total}"
                    )

    @property
    def num_tokens(self) -> int:
        return self.offsets[-1] + len(self.sentences[-1])

    def sentence_of(self, token_index: int) -> int:
        """Index of the sentence containing a global token index."""
        if not (0 <= token_index < self.num_tokens):
            raise MalformedInputError(
                f"token index {token_index} out of bounds for {self.doc_id!r} "
                f"({self.num_tokens} tokens)"
            )
        # bisect over the prefix sums
        lo, hi = 0, len(self.offsets) - 1
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if self.offsets[mid] <= token_index:
                lo = mid
            else:
                hi = mid - 1
        return lo

    def sentence_bounds(self, sentence_index: int) -> tuple[int, int]:
        """Global ``[start, end)`` token range of one sentence."""
        start = self.offsets[sentence_index]
        return start, start + len(self.sentences[sentence_index])

    def tokens_of(self, span: Span) -> tuple[str, ...]:
        if span.end > self.num_tokens:
            raise MalformedInputError(f"span {span.key()} exceeds document bounds")
        toks: list[str] = []
        for idx in range(span.start, span.end):
            si = self.sentence_of(idx)
            toks.append(self.sentences[si].tokens[idx - self.offsets[si]])
        return tuple(toks)

    def text_of(self, span: Span) -> str:
        return " ".join(self.tokens_of(span))

    def token_at(self, token_index: int) -> str:
        si = self.sentence_of(token_index)
        return self.sentences[si].tokens[token_index - self.offsets[si]]

    def sentence_text(self, sentence_index: int) -> str:
        return " ".join(self.sentences[sentence_index].tokens)

    def window_text(self, first_sentence: int, last_sentence: int) -> str:
        """Text of an inclusive sentence range, used as an entailment premise."""
        return " ".join(
            self.sentence_text(i) for i in range(first_sentence, last_sentence + 1)
        )

    def within_one_sentence(self, span: Span) -> bool:
        """Whether a span is contained in a single sentence.

        Argument spans must satisfy this; cluster mentions are allowed to
        cross sentence boundaries.
        """
        return self.sentence_of(span.start) == self.sentence_of(span.end - 1)


def span_from_json(obj: dict) -> Span:
    return Span.make(int(obj["start"]), int(obj["end"]), _opt_int(obj.get("head")))


def span_to_json(span: Span) -> dict:
    return {"start": span.start, "end": span.end, "head": span.head}


def _opt_int(value) -> int | None:
    return None if value is None else int(value)


def document_from_json(obj: dict) -> Document:
    """Parse the one-object-per-line document interchange format."""
    try:
        doc_id = str(obj["doc_id"])
        sentences = tuple(
            Sentence(i, tuple(str(t) for t in toks))
            for i, toks in enumerate(obj["sentences"])
        )
        clusters = []
        for c in obj.get("clusters", []):
            cc_id = c["cc_id"]
            mentions = tuple(
                Mention(span_from_json(m), cc_id) for m in c["mentions"]
            )
            clusters.append(EntityCluster(cc_id, mentions))
    except (KeyError, TypeError) as exc:
        raise MalformedInputError(f"bad document record: {exc}") from exc
    return Document(doc_id, sentences, tuple(clusters))


def document_to_json(doc: Document) -> dict:
    return {
        "doc_id": doc.doc_id,
        "sentences": [list(s.tokens) for s in doc.sentences],
        "clusters": [
            {
                "cc_id": c.cc_id,
                "mentions": [span_to_json(m.span) for m in c.mentions],
            }
            for c in doc.clusters
        ],
    }


def read_documents_jsonl(path: str) -> dict[str, Document]:
    """Load documents from a JSONL file, keyed by doc_id."""
    docs: dict[str, Document] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                doc = document_from_json(json.loads(line))
            except (json.JSONDecodeError, MalformedInputError) as exc:
                raise MalformedInputError(f"{path}:{lineno}: {exc}") from exc
            if doc.doc_id in docs:
                raise MalformedInputError(f"{path}:{lineno}: duplicate doc_id {doc.doc_id!r}")
            docs[doc.doc_id] = doc
    return docs


def write_documents_jsonl(path: str, docs: Iterable[Document]) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for doc in docs:
            fh.write(json.dumps(document_to_json(doc)) + "\n")


def iter_jsonl(path: str) -> Iterator[dict]:
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line:
                yield json.loads(line)
