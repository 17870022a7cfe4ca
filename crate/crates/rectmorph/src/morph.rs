//! Relaxed morphs (placeholder during bring-up).
