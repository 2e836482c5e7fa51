# Deduct package - normalization and premise-rewriting search
