# Descent Census - CLI Package
