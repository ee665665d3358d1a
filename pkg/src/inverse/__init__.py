# Inverse problem package
