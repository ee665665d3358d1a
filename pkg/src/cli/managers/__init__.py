# CLI Managers Package
