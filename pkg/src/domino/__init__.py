# Domino package
