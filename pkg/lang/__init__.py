# Lang package - surface language of the prover
