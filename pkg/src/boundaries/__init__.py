# Boundaries package
