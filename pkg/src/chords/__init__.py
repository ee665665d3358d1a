# Chords package
