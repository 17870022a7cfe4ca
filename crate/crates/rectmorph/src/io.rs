//! JSON formats (placeholder during bring-up).
