from polartrack.synth.generator import (
    SynthConfig,
    class_names,
    generate,
    golden_hashtag,
    synthetic_class_config,
    synthetic_paths,
    write_synthetic,
)

__all__ = [
    "SynthConfig",
    "class_names",
    "generate",
    "golden_hashtag",
    "synthetic_class_config",
    "synthetic_paths",
    "write_synthetic",
]
