"""Shared domain types, invariant validation, content hashing, and JSONL manifests.

All types are frozen pydantic models: safe to share between worker threads and
hashable enough to key caches. Structural shape (field names, types) is enforced
at construction; the semantic invariants that can legitimately be broken by data
arriving from disk or from a model are checked by :func:`validate_item` so that
callers get a violation list instead of an exception.
"""

from __future__ import annotations

import hashlib
import json
import os
from enum import Enum
from pathlib import Path
from typing import Any, Iterable, Iterator, TypeVar

from pydantic import BaseModel, ConfigDict

from .errors import InputError

SCHEMA_TAG = "acfforge/1"


class Corpus(str, Enum):
    CLOTHO = "Clotho"
    AUDIOCAPS = "AudioCaps"
    COMPA_R = "CompA-R"
    MUSICCAPS = "MusicCaps"
    LP_MUSICCAPS = "LP-MusicCaps"
    SPEECHCRAFT = "SpeechCraft"
    TACOS = "TACOS"


class QuestionType(str, Enum):
    SOUND = "Sound"
    MUSIC = "Music"
    SPEECH = "Speech"
    TEMPORAL = "Temporal"


#: Question types a flexible-mode generation may return.
FLEXIBLE_TYPES = (QuestionType.SOUND, QuestionType.MUSIC, QuestionType.SPEECH)
#: The single type allowed for timestamped sound-event corpora.
TEMPORAL_TYPES = (QuestionType.TEMPORAL,)


class AcLabel(str, Enum):
    WEAK = "Weak"
    STRONG = "Strong"


class ZeroAcClass(str, Enum):
    EXPLICIT = "ExplicitLogicalReasoning"
    IMPLICIT = "ImplicitKnowledgeRetrieval"


class FrozenModel(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")


class AudioRef(FrozenModel):
    """Reference to an audio clip; the pipeline never decodes it."""

    id: str
    path: str = ""
    duration_s: float | None = None


class UnifiedRecord(FrozenModel):
    """One (audio, question, caption) tuple in the unified question-answer format."""

    audio: AudioRef
    question: str
    caption: str
    source: Corpus


class CotBundle(FrozenModel):
    """Structured three-part reasoning plus its simplified single-paragraph form."""

    r1: str  # question-type analysis
    r2: str  # audio-content analysis (the source caption)
    r3: str  # answer selection
    simple: str


class QualityScores(FrozenModel):
    answer_consistency: int
    distractor_quality: int
    language_fluency: int
    reasoning_logic: int
    simple_reasoning_quality: int

    def as_tuple(self) -> tuple[int, int, int, int, int]:
        return (
            self.answer_consistency,
            self.distractor_quality,
            self.language_fluency,
            self.reasoning_logic,
            self.simple_reasoning_quality,
        )


class McqItem(FrozenModel):
    """A four-option multiple-choice question anchored to an audio clip.

    ``answer_index`` is 1-based (1..4); every internal options access converts
    explicitly via ``options[answer_index - 1]``.
    """

    id: str
    audio: AudioRef
    question: str
    options: tuple[str, ...]
    answer_index: int
    qtype: QuestionType
    source: Corpus
    cot: CotBundle | None = None
    quality: QualityScores | None = None
    provenance: str = ""

    @property
    def correct_option(self) -> str:
        return self.options[self.answer_index - 1]


class AcVerdict(FrozenModel):
    """Per-item silent-probe outcome: one correctness flag per probe model, in
    the configured model order, plus the derived weak/strong label."""

    item_id: str
    silent_correct: tuple[bool, ...]
    label: AcLabel
    zero_ac_class: ZeroAcClass | None = None


class TaggedEvent(FrozenModel):
    label: str
    start_s: float
    end_s: float


class QaPair(FrozenModel):
    question: str
    answer: str


class SourceManifestEntry(FrozenModel):
    """One raw corpus row before unification: captions, a native QA pair, or
    timestamped sound events, depending on the corpus."""

    audio: AudioRef
    captions: tuple[str, ...] = ()
    qa: QaPair | None = None
    tagged_events: tuple[TaggedEvent, ...] = ()


def word_count(text: str) -> int:
    return len(text.split())


def validate_item(item: McqItem) -> list[str]:
    """Check every McqItem invariant; return one descriptor per violation.

    A valid item yields an empty list. Descriptors are stable ``code: detail``
    strings so callers can match on the code prefix.
    """
    violations: list[str] = []
    if not item.id:
        violations.append("id-empty: item id must be nonempty")
    if not item.audio.id:
        violations.append("audio-id-empty: audio id must be nonempty")
    if item.audio.duration_s is not None and item.audio.duration_s < 0:
        violations.append(f"duration-negative: {item.audio.duration_s}")
    if not item.question.strip():
        violations.append("question-empty: question must be nonempty")
    if len(item.options) != 4:
        violations.append(f"options-count: expected 4 options, got {len(item.options)}")
    for i, opt in enumerate(item.options):
        if not opt.strip():
            violations.append(f"option-empty: option {i + 1} is empty")
    seen: dict[str, int] = {}
    for i, opt in enumerate(item.options):
        if opt in seen:
            violations.append(f"duplicate-option: options {seen[opt] + 1} and {i + 1} are equal")
        else:
            seen[opt] = i
    if not 1 <= item.answer_index <= 4:
        violations.append(f"index-out-of-range: answer_index {item.answer_index} not in 1..4")
    if item.cot is not None:
        for name in ("r1", "r2", "r3", "simple"):
            if not getattr(item.cot, name).strip():
                violations.append(f"cot-part-empty: {name} is empty")
        structured = word_count(item.cot.r1) + word_count(item.cot.r2) + word_count(item.cot.r3)
        if word_count(item.cot.simple) >= structured:
            violations.append(
                f"cot-simple-not-shorter: {word_count(item.cot.simple)} words vs {structured} structured"
            )
    if item.quality is not None:
        for name, score in zip(QualityScores.model_fields, item.quality.as_tuple()):
            if not 1 <= score <= 5:
                violations.append(f"score-out-of-range: {name}={score}")
    return violations


def canonical_json(value: Any) -> str:
    """Key-sorted compact JSON; the canonical pre-image for content hashing."""
    return json.dumps(value, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def content_hash(canonical_bytes: bytes) -> str:
    """SHA-256 hex digest of the given bytes; stable across hosts and runs."""
    return hashlib.sha256(canonical_bytes).hexdigest()


def hash_json(value: Any) -> str:
    """Hash any JSON-serializable value through its canonical encoding."""
    return content_hash(canonical_json(value).encode("utf-8"))


def stable_fraction(*parts: str) -> float:
    """Deterministic pseudo-random fraction in [0, 1) derived from string parts."""
    digest = hashlib.sha256("\x1f".join(parts).encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "big") / 2**64


def derive_seed(*parts: str) -> int:
    """Deterministic 64-bit seed derived from string parts."""
    digest = hashlib.sha256("\x1f".join(parts).encode("utf-8")).digest()
    return int.from_bytes(digest[8:16], "big")


M = TypeVar("M", bound=BaseModel)


def model_to_line(model: BaseModel) -> str:
    payload = model.model_dump(mode="json")
    payload["schema"] = SCHEMA_TAG
    return canonical_json(payload)


def model_from_line(line: str, cls: type[M]) -> M:
    try:
        payload = json.loads(line)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSONL line: {exc}") from exc
    if not isinstance(payload, dict):
        raise InputError("JSONL line must be an object")
    tag = payload.pop("schema", SCHEMA_TAG)
    if tag != SCHEMA_TAG:
        raise InputError(f"unsupported schema tag {tag!r}, expected {SCHEMA_TAG!r}")
    return cls.model_validate(payload)


def write_jsonl(path: str | Path, models: Iterable[BaseModel]) -> int:
    """Write models as one JSON object per line, atomically (tmp + rename)."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_name(path.name + ".tmp")
    count = 0
    with tmp.open("w", encoding="utf-8") as fh:
        for model in models:
            fh.write(model_to_line(model))
            fh.write("\n")
            count += 1
    os.replace(tmp, path)
    return count


def read_jsonl(path: str | Path, cls: type[M]) -> list[M]:
    out: list[M] = []
    with Path(path).open("r", encoding="utf-8") as fh:
        for raw in fh:
            raw = raw.strip()
            if raw:
                out.append(model_from_line(raw, cls))
    return out


def iter_jsonl(path: str | Path, cls: type[M]) -> Iterator[M]:
    with Path(path).open("r", encoding="utf-8") as fh:
        for raw in fh:
            raw = raw.strip()
            if raw:
                yield model_from_line(raw, cls)
