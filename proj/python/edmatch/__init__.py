from edmatch._edmatch import (
    adain,
    cmd,
    collision_ratio,
    content_l2,
    default_bank,
    edm,
    ehs,
    gram_loss,
    histogram_l2,
    interpolate,
    lab_to_rgb,
    mean_std_loss,
    metric_report,
    read_feature_file,
    rgb_to_lab,
    strength,
    sw1d,
    swd,
    wct,
    write_feature_file,
)

__all__ = [
    "adain",
    "cmd",
    "collision_ratio",
    "content_l2",
    "default_bank",
    "edm",
    "ehs",
    "gram_loss",
    "histogram_l2",
    "interpolate",
    "lab_to_rgb",
    "mean_std_loss",
    "metric_report",
    "read_feature_file",
    "rgb_to_lab",
    "strength",
    "sw1d",
    "swd",
    "wct",
    "write_feature_file",
]
