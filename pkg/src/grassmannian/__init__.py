# Grassmannian package
