"""
Base class for deriving a model class for each section of mvlab.cfg
"""


class BaseSettings:
    """
    Base class for deriving a model class for each section of mvlab.cfg

    Subclasses list their fields, a default value for each field, and
    a converter used when values are read back from mvlab.cfg as strings.
    """

    def __init__(self):
        # Saved in mvlab.cfg:
        self.mvlab_config = dict()

        self.fields = []

        self.default = dict()

        self.converters = dict()

    def set_default_for_field(self, field):
        """
        Set default value for one field.
        """
        self.mvlab_config[field] = self.default[field]

    def set_defaults(self):
        """
        Set default values for configuration parameters
        that will appear in mvlab.cfg for fields in this section
        """
        for field in self.fields:
            self.set_default_for_field(field)

    def set_from_string(self, field, value):
        """
        Set a field from its string representation in mvlab.cfg
        """
        converter = self.converters.get(field, str)
        self.mvlab_config[field] = converter(value)
