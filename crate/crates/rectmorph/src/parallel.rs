//! Parallel rotations (placeholder during bring-up).
