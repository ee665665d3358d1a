# Amplituhedron package
