"""
URL configuration for ortho_webs project.

The root redirects to the evaluation endpoint; the app lives under webs/.
"""
from django.contrib import admin
from django.shortcuts import redirect
from django.urls import include, path

urlpatterns = [
    path('', lambda request: redirect('webs_app:evaluate')),
    path('admin/', admin.site.urls),
    path('webs/', include('webs_app.urls', namespace='webs_app')),
]
