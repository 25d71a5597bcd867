# Spectral density toolkit
# Spectral density functions, eigenvalue bounds and determinant approximation for finite multigraphs
