import logging

from django.apps import AppConfig
from django.conf import settings


logger = logging.getLogger('harm_site.apps')


class HarmSiteConfig(AppConfig):
    name = 'harm_site'

    def ready(self):
        if not settings.TESTING:
            logger.info('%s ready (engine %s, version %s)', self.name, settings.ENGINE_VERSION,
                        settings.VERSION_ID)
