"""Audio MCQ dataset pipeline: generation, audio-contribution filtering,
curriculum assembly, and GRPO objective checks, runnable offline against
deterministic mock backends."""

__version__ = "0.1.0"
