"""Bundled corpus files; load them by name through the corpus command."""
