"""Nucleotide sequence manipulation."""

COMPLEMENT = {"A": "T", "T": "A", "C": "G", "G": "C"}
CODON_SIZE = 3
START = "ATG"
STOPS = {"TAA", "TAG", "TGA"}


def validate(sequence):
    cleaned = sequence.upper().replace(" ", "")
    for ch in cleaned:
        if ch not in COMPLEMENT:
            raise ValueError(f"unexpected base {ch!r}")
    return cleaned


def reverse_complement(sequence):
    cleaned = validate(sequence)
    return "".join(COMPLEMENT[base] for base in reversed(cleaned))


def gc_content(sequence):
    cleaned = validate(sequence)
    if not cleaned:
        return 0.0
    gc = sum(1 for base in cleaned if base in "GC")
    return gc / len(cleaned)


def codons(sequence, frame=0):
    cleaned = validate(sequence)[frame:]
    out = []
    for i in range(0, len(cleaned) - CODON_SIZE + 1, CODON_SIZE):
        out.append(cleaned[i:i + CODON_SIZE])
    return out


def find_orfs(sequence):
    """Open reading frames: START..STOP spans in any frame."""
    cleaned = validate(sequence)
    orfs = []
    for frame in range(CODON_SIZE):
        start_at = None
        for i, codon in enumerate(codons(cleaned, frame)):
            position = frame + i * CODON_SIZE
            if codon == START and start_at is None:
                start_at = position
            elif codon in STOPS and start_at is not None:
                orfs.append((start_at, position + CODON_SIZE))
                start_at = None
    return orfs


def kmer_counts(sequence, k=3):
    cleaned = validate(sequence)
    counts = {}
    for i in range(len(cleaned) - k + 1):
        kmer = cleaned[i:i + k]
        counts[kmer] = counts.get(kmer, 0) + 1
    return counts
