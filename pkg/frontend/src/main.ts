import { ApiClient } from './api.js';
import { createWizardApp } from './app.js';

const root = document.getElementById('app');
if (root) {
  const app = createWizardApp(root, new ApiClient(''), {
    specName: new URLSearchParams(window.location.search).get('name') ?? 'New crawl',
  });
  void app.ready.catch((error) => {
    root.textContent = `could not reach the wizard service: ${error}`;
  });
}
