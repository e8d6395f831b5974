import inspect
import logging
import pkgutil
from importlib import import_module

import ChromaticPipe.core.errors as ers

logger = logging.getLogger(__name__)


class Plugin(object):
    """ Base class for the Plugin object, from which each identity
        check should inherit. Each new plugin needs to override
        two methods: __init__() and on_run(). In the former only a
        small description of your plugin should be given; in the
        latter the actual check. The verify command calls on_run()
        once for every graph it was given.
    """

    def __init__(self):
        self.title = "Base identity"
        self.call_level = 500
        self.command_full = "base"
        self.description = "Superclass of every identity the verify command runs"

        # Identities that only make sense for graphs carrying a given
        # kind of element skip the other graphs instead of failing
        self.needs_edges = False
        self.needs_arcs = False

    def applies_to(self, graph):
        """ Whether on_run() has something to check on this graph. """
        if self.needs_edges and not graph.edges:
            return False
        if self.needs_arcs and not graph.arcs:
            return False
        return True

    def on_run(self, graph, args):
        """ Method that's called by the verify command. Override it
            and return a VerificationResult for the given graph. The
            parsed command line is passed along as args, so plugins
            can read --bound, --xmax and friends. Do not rely on
            functions from other plugins.
        """
        raise NotImplementedError


class PluginCollector(object):
    """ Collects one instance of every Plugin subclass defined in the
        modules of a plugin package (ChromaticPipe.plugins by default).
    """

    def __init__(self, plug_dir="ChromaticPipe.plugins"):
        self.plugin_package = plug_dir
        self.plugins = []
        self.find_plugins()

    def find_plugins(self):
        """ Import every module of the package and instantiate the Plugin
            subclasses it defines, lowest call level first.
        """
        imported_package = import_module(self.plugin_package)

        for _, pluginname, ispkg in pkgutil.iter_modules(imported_package.__path__, imported_package.__name__ + '.'):
            if not ispkg:
                plugin_module = import_module(pluginname)
                clsmembers = inspect.getmembers(plugin_module, inspect.isclass)
                for (_, c) in clsmembers:
                    # Skip Plugin itself and classes a module merely imports
                    if issubclass(c, Plugin) and c is not Plugin and c.__module__ == pluginname:
                        self.plugins.append(c())

        self.plugins.sort(key=lambda plugin: (plugin.call_level, plugin.command_full))
        logger.debug(f"Found plugins {[plugin.command_full for plugin in self.plugins]}")

    def names(self):
        return [plugin.command_full for plugin in self.plugins]

    def get(self, name):
        """ Returns the plugins selected by name; 'all' selects every plugin.

            Raises:
                UnknownIdentityError: no plugin answers to this name.
        """
        if name == "all":
            return list(self.plugins)
        for plugin in self.plugins:
            if plugin.command_full == name:
                return [plugin]
        raise ers.UnknownIdentityError(f"Unknown identity '{name}', choose from {', '.join(self.names() + ['all'])}")
