# Descent Census - Package
