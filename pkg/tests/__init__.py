# Test package for cliquehom
