from ._core import (
    ENV_VERSION,
    Checkpoint,
    DemoDataset,
    EnvState,
    FetchQuest,
    classify_strategy,
    decayed_lr,
    gail_reward,
    generate_dataset,
    load_checkpoint,
    load_dataset,
    parse_distribution,
    train,
)

__all__ = [
    "ENV_VERSION",
    "Checkpoint",
    "DemoDataset",
    "EnvState",
    "FetchQuest",
    "classify_strategy",
    "decayed_lr",
    "gail_reward",
    "generate_dataset",
    "load_checkpoint",
    "load_dataset",
    "parse_distribution",
    "train",
]
