# Checker package - independent replay of recorded proof traces
