# Evaluation package - reduction semantics, random values and falsification
