# Unit tests: fast, no external services
