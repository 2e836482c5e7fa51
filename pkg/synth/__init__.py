# Synth package - directed lemma synthesis by bottom-up enumeration
