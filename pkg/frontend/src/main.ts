import { App } from './app.js';

// Entry point for the browser build. The annotator id comes from the
// query string so two reviewers can work side by side in two tabs:
//   http://127.0.0.1:8765/?annotator=alice
const params = new URLSearchParams(window.location.search);
const annotator = params.get('annotator') ?? 'anonymous';

const root = document.getElementById('app');
if (!root) throw new Error('missing #app mount point');

const app = new App(root, '', annotator);
void app.start();

const pair = [params.get('a'), params.get('b')];
if (pair[0] && pair[1]) {
  void app.refreshDashboard(pair[0], pair[1]);
}

declare global {
  interface Window {
    annotatorApp: App;
  }
}
window.annotatorApp = app;
