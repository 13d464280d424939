"""
Custom logging for mvlab records the calling module, line number and
function of every message, and sends messages to an in-memory buffer
(see Logger.get_value) and to a debug log file.

The log file location is $MVLAB_DEBUG_LOG_PATH (a file, or a directory
to hold mvlab_debug_log.txt), falling back to the user log directory
chosen by appdirs.
"""
# We want logger singleton to be lowercase, and we want logger.info,
# logger.warning etc. methods to be lowercase:
import inspect
import logging
import os

from io import StringIO

import appdirs

from ..constants import APPNAME, APPAUTHOR

LOG_FILE_NAME = "mvlab_debug_log.txt"


class MvlabFormatter(logging.Formatter):
    """
    Can be used to handle logging messages coming from non-mvlab modules
    which lack the extra attributes.
    """

    def format(self, record):
        """
        Overridden from logging.Formatter class
        """
        if not hasattr(record, "module_name"):
            record.module_name = ""
        if not hasattr(record, "function_name"):
            record.function_name = ""
        if not hasattr(record, "line_number"):
            record.line_number = 0
        return super().format(record)


def default_log_file_path():
    """
    Path of the debug log file
    """
    if "MVLAB_DEBUG_LOG_PATH" in os.environ:
        log_file_path = os.path.abspath(os.environ["MVLAB_DEBUG_LOG_PATH"])
        if os.path.isdir(log_file_path):
            log_file_path = os.path.join(log_file_path, LOG_FILE_NAME)
        return log_file_path
    return os.path.join(appdirs.user_log_dir(APPNAME, APPAUTHOR), LOG_FILE_NAME)


class Logger:
    """
    Allows logger.debug(...), logger.info(...) etc. to write to the
    in-memory log and to the debug log file
    """

    # pylint: disable=too-many-instance-attributes
    def __init__(self, name):
        self.name = name
        self.logger_object = logging.getLogger(self.name)
        self.format_string = ""
        self.logger_output = None
        self.stream_handler = None
        self.file_handler = None
        self.level = logging.getLevelName(
            os.environ.get("MVLAB_DEBUG_LOG_LEVEL", "INFO").upper()
        )
        self.app_root_dir = os.path.realpath(
            os.path.join(os.path.dirname(__file__), "..", "..")
        )
        self.configure_logger()

    def configure_logger(self):
        """
        Configure logger object
        """
        self.logger_object = logging.getLogger(self.name)
        self.logger_object.setLevel(self.level)
        self.logger_object.propagate = False

        self.format_string = (
            "%(asctime)s - %(module_name)s - %(line_number)d - "
            "%(function_name)s - %(levelname)s - "
            "%(message)s"
        )

        # Send all log messages to a string.
        self.logger_output = StringIO()
        self.stream_handler = logging.StreamHandler(stream=self.logger_output)
        self.stream_handler.setLevel(self.level)
        self.stream_handler.setFormatter(MvlabFormatter(self.format_string))
        self.logger_object.addHandler(self.stream_handler)

        # Finally, send all log messages to a log file, if we can write one.
        log_file_path = default_log_file_path()
        try:
            os.makedirs(os.path.dirname(log_file_path), exist_ok=True)
            self.file_handler = logging.FileHandler(log_file_path)
        except OSError:
            self.file_handler = None
            return
        self.file_handler.setLevel(self.level)
        self.file_handler.setFormatter(MvlabFormatter(self.format_string))
        self.logger_object.addHandler(self.file_handler)

    def _caller_extra(self):
        """
        Module name, line number and function name of the code
        which called one of the logging methods below
        """
        frame = inspect.currentframe()
        outer_frame = inspect.getouterframes(frame)[2]
        try:
            module_name = os.path.relpath(outer_frame[1], self.app_root_dir)
        except ValueError:
            module_name = os.path.basename(outer_frame[1])
        return {
            "module_name": module_name,
            "line_number": outer_frame[2],
            "function_name": outer_frame[3],
        }

    def debug(self, message):
        """
        Log a message with level logging.DEBUG
        """
        if self.level > logging.DEBUG:
            return
        self.logger_object.debug(message, extra=self._caller_extra())

    def info(self, message):
        """
        Log a message with level logging.INFO
        """
        if self.level > logging.INFO:
            return
        self.logger_object.info(message, extra=self._caller_extra())

    def warning(self, message):
        """
        Log a message with level logging.WARNING
        """
        if self.level > logging.WARNING:
            return
        self.logger_object.warning(message, extra=self._caller_extra())

    def error(self, message):
        """
        Log a message with level logging.ERROR
        """
        self.logger_object.error(message, extra=self._caller_extra())

    def exception(self, message):
        """
        Log a message and traceback for an exception
        """
        self.logger_object.exception(message, extra=self._caller_extra())

    def get_value(self):
        """
        Return all logs sent to StringIO handler
        """
        self.stream_handler.flush()
        return self.logger_output.getvalue()


logger = Logger("mvlab")  # pylint: disable=invalid-name
