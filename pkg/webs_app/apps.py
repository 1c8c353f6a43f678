from django.apps import AppConfig


class WebsAppConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'webs_app'
    verbose_name = 'Orthogonal Web Calculus'
