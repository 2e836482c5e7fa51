# Engine package - the proof loop, induction and lemma tactics
