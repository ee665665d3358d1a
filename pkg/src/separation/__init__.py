# Separation package
