# Layouts package
