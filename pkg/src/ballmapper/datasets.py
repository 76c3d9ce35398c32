"""Access to the data files shipped with the package."""
from importlib.resources import files


def auto_csv_path() -> str:
    """Path of the bundled 74-row 1978 automobile dataset."""
    return str(files("ballmapper").joinpath("data/auto.csv"))
