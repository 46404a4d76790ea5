from polartrack.baseline.kmeans import (
    KMeansResult,
    UserVector,
    build_vectors,
    run_baseline,
    seeded_kmeans,
)

__all__ = ["KMeansResult", "UserVector", "build_vectors", "run_baseline", "seeded_kmeans"]
