"""Pipeline orchestration shared by the CLI commands."""
