# Rewrite package - substitution, matching, abstraction and progress measures
