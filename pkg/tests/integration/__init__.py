# Integration tests: full CLI runs and synthetic lag recovery
