"""
Exception hierarchy for polar-tracker
"""

from typing import Iterable, Optional


class PolarTrackError(Exception):
    """Base class for all errors raised by the package"""


class CorpusFormatError(PolarTrackError, ValueError):
    """A corpus file line could not be parsed into a TweetRecord"""

    def __init__(self, reason: str, path: Optional[str] = None, line_number: Optional[int] = None):
        self.reason = reason
        self.path = path
        self.line_number = line_number
        location = ""
        if path is not None and line_number is not None:
            location = f"{path}:{line_number}: "
        elif line_number is not None:
            location = f"line {line_number}: "
        super().__init__(f"{location}{reason}")


class DuplicateTweetError(CorpusFormatError):
    """Two records share the same tweet id"""


class ConfigValidationError(PolarTrackError, ValueError):
    """A class configuration violates one or more constraints"""

    def __init__(self, problems: Iterable[str]):
        self.problems = list(problems)
        super().__init__("Invalid configuration: " + "; ".join(self.problems))


class UnknownUserError(PolarTrackError, KeyError):
    """A user id is not part of the corpus"""

    def __str__(self):
        return f"Unknown user id: {self.args[0]!r}"


class FeatureSpaceError(PolarTrackError, ValueError):
    """A designated seed hashtag is missing from the k-means feature space"""
