"""
Methods for validating settings.

The global settings singleton is imported inline to avoid
circular dependencies.
"""
# pylint: disable=import-outside-toplevel
from ...logs import logger
from ...utils.exceptions import InvalidSettings


def validate_settings():
    """
    Validate settings (an instance of Settings)
    """
    check_general_settings()
    check_budgets()
    check_quadrature_settings()
    logger.debug("Settings validation - succeeded!")


def check_general_settings():
    """Check precision and threads
    """
    from ...conf import settings

    if settings.general.precision < 53:
        message = "The working precision must be at least 53 bits."
        raise InvalidSettings(message, "precision")
    if settings.general.threads < 1:
        message = "At least one worker thread is required."
        raise InvalidSettings(message, "threads")


def check_budgets():
    """Check that every budget is a positive integer
    """
    from ...conf import settings

    for field in settings.budgets.fields:
        if settings[field] < 1:
            message = "The %s must be a positive integer." % field.replace("_", " ")
            raise InvalidSettings(message, field)


def check_quadrature_settings():
    """Check quadrature order, depth and tolerance
    """
    from ...conf import settings

    if settings.quadrature.nodes < 1:
        raise InvalidSettings("At least one quadrature node is required.", "nodes")
    if settings.quadrature.depth is not None and settings.quadrature.depth < 0:
        raise InvalidSettings("The subdivision depth can't be negative.", "depth")
    if not 0 < settings.quadrature.variation <= 1:
        message = "The phase variation bound must lie in (0, 1]."
        raise InvalidSettings(message, "variation")
    if settings.quadrature.tolerance < 0:
        raise InvalidSettings("The tolerance can't be negative.", "tolerance")
