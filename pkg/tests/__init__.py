# Tests package for the spectral density toolkit
