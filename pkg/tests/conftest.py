import random

from swtorsion import Presentation, SurfaceModel, random_symplectic


def make_presentation(g: int, handles: int, words: int, seed: int) -> Presentation:
    surface = SurfaceModel(g + handles, (handles, g))
    return Presentation(g, handles, random_symplectic(surface, words, seed))


def presentation_sample(count: int, seed: int, *, gmax=2, hmax=2, cap=3,
                        words=8) -> list:
    """Deterministic spread of random presentations within the given bounds."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        g = rng.randint(0, gmax)
        N = rng.randint(0, hmax)
        if g + N > cap:
            continue
        out.append(make_presentation(g, N, rng.randint(0, words),
                                     rng.randint(0, 10 ** 9)))
    return out
