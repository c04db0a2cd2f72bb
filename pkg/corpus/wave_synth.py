"""Sample-based waveform synthesis (lists of floats)."""

import math

SAMPLE_RATE = 8000


def sine_wave(freq, seconds, amplitude=1.0):
    count = int(SAMPLE_RATE * seconds)
    return [
        amplitude * math.sin(2 * math.pi * freq * i / SAMPLE_RATE)
        for i in range(count)
    ]


def square_wave(freq, seconds, amplitude=1.0):
    samples = sine_wave(freq, seconds, 1.0)
    return [amplitude if s >= 0 else -amplitude for s in samples]


def mix(*waves):
    if not waves:
        return []
    length = max(len(w) for w in waves)
    out = []
    for i in range(length):
        total = sum(w[i] for w in waves if i < len(w))
        out.append(total / len(waves))
    return out


def envelope(samples, attack=0.1, release=0.2):
    n = len(samples)
    attack_n = int(n * attack)
    release_n = int(n * release)
    out = list(samples)
    for i in range(attack_n):
        out[i] *= i / max(1, attack_n)
    for i in range(release_n):
        out[n - 1 - i] *= i / max(1, release_n)
    return out


def rms(samples):
    if not samples:
        return 0.0
    return math.sqrt(sum(s * s for s in samples) / len(samples))


def clip_count(samples, limit=1.0):
    return sum(1 for s in samples if abs(s) > limit)
